"""Exact f-balanced dominating set solver and the gadget canonicalizer.

solve_fbds_brute enumerates, class by class, every way of picking exactly f
intervals per color, and returns the first selection whose closed
neighborhoods cover every vertex.  Classes are visited smallest first and a
partial selection is abandoned once even the union of all remaining classes'
neighborhoods cannot cover the rest (a sound prune).  The guard refuses when
the combination count exceeds COMBINATION_GUARD.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import TYPE_CHECKING

from .model import (
    ColoredIntervalInstance,
    GuardError,
    SolutionSet,
    solution_from_ids,
    verify_solution,
)

if TYPE_CHECKING:
    from .reductions import GadgetMetadata

COMBINATION_GUARD = 10**8


@dataclass(frozen=True)
class DominationIndex:
    """Closed-neighborhood bitmasks: bit v of closed_masks[u] is set iff u = v
    or intervals u and v intersect.  A selection dominates the instance iff the
    OR of its members' masks is full_mask."""

    closed_masks: tuple[int, ...]
    full_mask: int

    @staticmethod
    def from_instance(inst: ColoredIntervalInstance) -> "DominationIndex":
        masks = [1 << iv.id for iv in inst.intervals]
        ordered = sorted(inst.intervals, key=lambda iv: (iv.left, iv.right, iv.id))
        for pos, a in enumerate(ordered):
            for b in ordered[pos + 1 :]:
                if b.left > a.right:
                    break
                masks[a.id] |= 1 << b.id
                masks[b.id] |= 1 << a.id
        return DominationIndex(
            closed_masks=tuple(masks), full_mask=(1 << inst.n) - 1
        )


def solve_fbds_brute(
    inst: ColoredIntervalInstance, f: int, stats: dict | None = None
) -> SolutionSet | None:
    """Return a dominating set with exactly f intervals of every color, or None.

    Raises GuardError when the product of per-class C(size, f) combination
    counts exceeds COMBINATION_GUARD.
    """
    if f < 1:
        raise ValueError("f must be >= 1")
    classes = sorted(
        ([iv.id for iv in ivs] for ivs in inst.color_classes().values()),
        key=lambda ids: (len(ids), ids),
    )
    total = 1
    for ids in classes:
        total *= comb(len(ids), f)
        if total > COMBINATION_GUARD:
            raise GuardError(
                f"{total}+ balanced combinations exceeds {COMBINATION_GUARD}; "
                "instance too large for exact BDS"
            )
    if stats is not None:
        stats["combinations_bound"] = total
        stats["combinations_tried"] = 0
        stats["feasible"] = False
    if total == 0:
        return None
    index = DominationIndex.from_instance(inst)
    suffix_reach = [0] * (len(classes) + 1)
    for t in range(len(classes) - 1, -1, -1):
        reach = suffix_reach[t + 1]
        for id in classes[t]:
            reach |= index.closed_masks[id]
        suffix_reach[t] = reach
    tried = [0]

    def descend(t: int, chosen: list[int], covered: int) -> list[int] | None:
        if covered | suffix_reach[t] != index.full_mask:
            return None
        if t == len(classes):
            return list(chosen)
        for combo in combinations(classes[t], f):
            tried[0] += 1
            mask = covered
            for id in combo:
                mask |= index.closed_masks[id]
            found = descend(t + 1, chosen + list(combo), mask)
            if found is not None:
                return found
        return None

    found = descend(0, [], 0)
    if stats is not None:
        stats["combinations_tried"] = tried[0]
        stats["feasible"] = found is not None
    if found is None:
        return None
    sol = solution_from_ids(inst, "BDS", found)
    verdict = verify_solution(inst, sol, f)
    assert verdict.valid, verdict.reason
    return sol


def canonicalize_bds(
    inst: ColoredIntervalInstance, meta: "GadgetMetadata", sol: SolutionSet
) -> SolutionSet:
    """Rewrite a valid 1-balanced dominating set of a reduced instance into the
    canonical per-variable form.

    For each variable, a valid balanced solution contains exactly one of the
    two hub vertices.  With the true hub in, both false-side leaves are forced
    in and the true-side leaves can be traded for that variable's positive
    clause vertices without breaking balance or domination; symmetrically for
    the false hub.  Variables are processed in index order; the result is
    unchanged by a second pass.
    """
    if meta.kind != "domset":
        raise ValueError("metadata does not describe a dominating-set reduction")
    verdict = verify_solution(inst, sol, 1)
    if not verdict.valid:
        raise ValueError(f"solution is not a valid 1-balanced dominating set: {verdict.reason}")
    ids = set(sol.ids)
    for var in sorted(meta.variable_gadgets):
        g = meta.variable_gadgets[var]
        if g.h_t in ids:
            ids.discard(g.t1)
            ids.discard(g.t2)
            ids.add(g.c_t1)
            ids.add(g.c_t2)
        elif g.h_f in ids:
            ids.discard(g.f1)
            ids.discard(g.f2)
            ids.add(g.c_f1)
            ids.add(g.c_f2)
        else:
            raise ValueError(
                f"metadata inconsistent with solution: variable x{var} has no hub vertex"
            )
    out = solution_from_ids(inst, "BDS", ids)
    verdict = verify_solution(inst, out, 1)
    assert verdict.valid, verdict.reason
    return out
