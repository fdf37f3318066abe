"""Approximate solvers for picking one interval per color, maximizing colors hit.

greedy_mcis scans by right endpoint and keeps an interval when its color slot
is still free and it clears the frontier of the last kept interval; it always
reaches at least half the optimum color count.  local_search_mcis refines the
greedy set with first-improvement b-swaps.  is_b_locally_optimal is the naive
re-check used by the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .model import (
    ColoredIntervalInstance,
    GuardError,
    SolutionSet,
    intersects,
    solution_from_ids,
)

NEIGHBOR_BUDGET = 10**9


@dataclass(frozen=True)
class LocalSearchConfig:
    b: int = 2
    max_rounds: int | None = None
    seed_with_greedy: bool = True
    neighbor_budget: int = NEIGHBOR_BUDGET


def greedy_mcis(inst: ColoredIntervalInstance, stats: dict | None = None) -> SolutionSet:
    slots: dict[int, int] = {}
    frontier: int | None = None
    for iv in sorted(inst.intervals, key=lambda iv: (iv.right, iv.left, iv.id)):
        if iv.color in slots:
            continue
        if frontier is not None and iv.left <= frontier:
            continue
        slots[iv.color] = iv.id
        frontier = iv.right
    sol = solution_from_ids(inst, "MCIS", slots.values())
    if stats is not None:
        stats["colors"] = sol.distinct_colors
    return sol


def _guard_budget(n: int, b: int, budget: int) -> None:
    if b < 1:
        raise ValueError("b must be >= 1")
    if n ** (2 * b) > budget:
        raise GuardError(
            f"n^(2b) = {n ** (2 * b)} neighbor evaluations exceeds budget {budget}"
        )


def _conflict_masks(inst: ColoredIntervalInstance) -> list[int]:
    masks = [0] * inst.n
    ordered = sorted(inst.intervals, key=lambda iv: (iv.left, iv.right, iv.id))
    for pos, a in enumerate(ordered):
        for b in ordered[pos + 1 :]:
            if b.left > a.right:
                break
            masks[a.id] |= 1 << b.id
            masks[b.id] |= 1 << a.id
    return masks


def _improving_neighbor(
    inst: ColoredIntervalInstance,
    masks: list[int],
    current: frozenset[int],
    b: int,
    counter: list[int],
) -> frozenset[int] | None:
    """First b-swap neighbor with more colors, or None.

    Removal sets are tried smallest first; for each, additions of exactly
    |removals|+1 outside intervals are grown in id order, rejecting any that
    intersects a retained interval or repeats a retained color before
    recursing.  An improving neighbor exists iff one of this shape does.
    """
    members = sorted(current)
    outside = [iv for iv in inst.intervals if iv.id not in current]
    for removals in range(min(b, len(members)) + 1):
        need = removals + 1
        if need > b:
            break
        for removed in combinations(members, removals):
            base = [id for id in members if id not in removed]
            base_mask = 0
            for id in base:
                base_mask |= 1 << id
            base_colors = {inst.interval(id).color for id in base}

            def grow(start: int, picked: list[int], mask: int, colors: set[int]):
                counter[0] += 1
                if len(picked) == need:
                    return frozenset(base) | frozenset(picked)
                for pos in range(start, len(outside)):
                    iv = outside[pos]
                    if iv.color in colors or masks[iv.id] & mask:
                        continue
                    found = grow(
                        pos + 1, picked + [iv.id], mask | (1 << iv.id), colors | {iv.color}
                    )
                    if found is not None:
                        return found
                return None

            found = grow(0, [], base_mask, set(base_colors))
            if found is not None:
                return found
    return None


def local_search_mcis(
    inst: ColoredIntervalInstance,
    cfg: LocalSearchConfig = LocalSearchConfig(),
    stats: dict | None = None,
) -> SolutionSet:
    """Greedy seed plus first-improvement b-swaps until no neighbor helps.

    Candidates stay independent with at most one interval per color, so the
    color count rises by at least one per round and the loop runs at most k
    rounds.  Raises GuardError when n^(2b) exceeds cfg.neighbor_budget.
    """
    _guard_budget(inst.n, cfg.b, cfg.neighbor_budget)
    masks = _conflict_masks(inst)
    if cfg.seed_with_greedy:
        current = greedy_mcis(inst).ids
    else:
        current = frozenset()
    rounds = 0
    counter = [0]
    while len(current) < inst.k:
        if cfg.max_rounds is not None and rounds >= cfg.max_rounds:
            break
        nxt = _improving_neighbor(inst, masks, current, cfg.b, counter)
        if nxt is None:
            break
        current = nxt
        rounds += 1
        assert rounds <= inst.k
    sol = solution_from_ids(inst, "MCIS", current)
    if stats is not None:
        stats.update(
            colors=sol.distinct_colors, rounds=rounds, neighbors_evaluated=counter[0]
        )
    return sol


def is_b_locally_optimal(
    inst: ColoredIntervalInstance,
    sol: SolutionSet,
    b: int,
    budget: int = NEIGHBOR_BUDGET,
) -> bool:
    """Naive check that no neighbor within b removals and b additions has more colors.

    Enumerates every removal subset and every outside addition subset up to
    size b and tests independence pairwise; deliberately unshared with the
    solver's pruned search.
    """
    _guard_budget(inst.n, b, budget)
    members = sorted(sol.ids)
    outside = [iv.id for iv in inst.intervals if iv.id not in sol.ids]
    base_colors = len({inst.interval(id).color for id in members})
    for removals in range(min(b, len(members)) + 1):
        for removed in combinations(members, removals):
            base = [id for id in members if id not in removed]
            for additions in range(1, b + 1):
                for added in combinations(outside, additions):
                    candidate = base + list(added)
                    colors = {inst.interval(id).color for id in candidate}
                    if len(colors) <= base_colors:
                        continue
                    ivs = [inst.interval(id) for id in candidate]
                    if any(
                        intersects(a, c)
                        for a, c in combinations(ivs, 2)
                    ):
                        continue
                    return False
    return True
