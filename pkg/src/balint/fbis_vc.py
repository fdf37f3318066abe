"""f-balanced independent set via minimum vertex cover enumeration.

On an interval graph the earliest-right-endpoint greedy builds a maximum
independent set, so its complement is a minimum vertex cover (size tau).
Every maximal independent set has the form (V_ind u S) \\ N(S) for some
independent S inside the cover, so scanning those at most 2^tau candidates
and keeping one with at least f intervals of every color decides the problem.
Preferable to the vector DP when tau is small; refuses when tau > TAU_GUARD.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .model import (
    ColoredIntervalInstance,
    GuardError,
    SolutionSet,
    intersects,
    solution_from_ids,
    verify_solution,
)

TAU_GUARD = 30


@dataclass(frozen=True)
class VertexCoverDecomposition:
    independent: frozenset[int]
    cover: frozenset[int]

    @property
    def tau(self) -> int:
        return len(self.cover)


def minimum_vertex_cover(inst: ColoredIntervalInstance) -> VertexCoverDecomposition:
    """Greedy maximum independent set by right endpoint; cover = complement."""
    chosen: list[int] = []
    frontier: int | None = None
    for iv in sorted(inst.intervals, key=lambda iv: (iv.right, iv.left, iv.id)):
        if frontier is None or iv.left > frontier:
            chosen.append(iv.id)
            frontier = iv.right
    independent = frozenset(chosen)
    cover = frozenset(iv.id for iv in inst.intervals) - independent
    return VertexCoverDecomposition(independent=independent, cover=cover)


def _is_independent(inst: ColoredIntervalInstance, ids) -> bool:
    members = sorted((inst.interval(i) for i in ids), key=lambda iv: (iv.left, iv.right))
    return all(not intersects(a, b) for a, b in zip(members, members[1:]))


def enumerate_swap_candidates(
    inst: ColoredIntervalInstance, decomp: VertexCoverDecomposition
) -> Iterator[frozenset[int]]:
    """Yield (V_ind u S) \\ N(S) for every independent S inside the cover.

    The cover is scanned in right-endpoint order, so a branch may include its
    next vertex only when it clears the frontier of the chosen ones; that
    prunes exactly the non-independent S.  The empty S (candidate V_ind) comes
    first.  Every maximal independent set of the instance is yielded.
    """
    cover = sorted((inst.interval(i) for i in decomp.cover), key=lambda iv: (iv.right, iv.left, iv.id))
    vind = decomp.independent
    vind_neighbors = {
        c.id: [v for v in vind if intersects(inst.interval(v), c)] for c in cover
    }

    def walk(idx: int, chosen: tuple[int, ...], frontier: int | None):
        if idx == len(cover):
            removed = set()
            for s in chosen:
                removed.update(vind_neighbors[s])
            candidate = frozenset((vind - removed) | set(chosen))
            assert _is_independent(inst, candidate)
            yield candidate
            return
        yield from walk(idx + 1, chosen, frontier)
        iv = cover[idx]
        if frontier is None or iv.left > frontier:
            yield from walk(idx + 1, chosen + (iv.id,), iv.right)

    yield from walk(0, (), None)


def solve_fbis_vc(
    inst: ColoredIntervalInstance, f: int, stats: dict | None = None
) -> SolutionSet | None:
    """Return an independent set with exactly f intervals per color, or None.

    Streams the swap candidates and extracts, from the first candidate with at
    least f intervals of every color, the f lowest ids per color.  Runs in
    O(2^tau n); raises GuardError when tau > TAU_GUARD (use the DP instead).
    """
    if f < 1:
        raise ValueError("f must be >= 1")
    decomp = minimum_vertex_cover(inst)
    if stats is not None:
        stats["tau"] = decomp.tau
        stats["candidates_examined"] = 0
    if inst.is_color_deficient():
        if stats is not None:
            stats.update(feasible=False, reason="color-deficient")
        return None
    if decomp.tau > TAU_GUARD:
        raise GuardError(
            f"tau = {decomp.tau} exceeds {TAU_GUARD}; 2^tau enumeration refused "
            "(the vector DP handles this instance)"
        )
    examined = 0
    for candidate in enumerate_swap_candidates(inst, decomp):
        examined += 1
        buckets: dict[int, list[int]] = {c: [] for c in range(1, inst.k + 1)}
        for id in candidate:
            buckets[inst.interval(id).color].append(id)
        if all(len(ids) >= f for ids in buckets.values()):
            picked = [id for ids in buckets.values() for id in sorted(ids)[:f]]
            sol = solution_from_ids(inst, "BIS", picked)
            verdict = verify_solution(inst, sol, f)
            assert verdict.valid, verdict.reason
            if stats is not None:
                stats.update(feasible=True, candidates_examined=examined)
            return sol
    assert examined <= 2 ** decomp.tau
    if stats is not None:
        stats.update(feasible=False, candidates_examined=examined)
    return None
