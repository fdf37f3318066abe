"""Seeded instance and formula generators.

All randomness comes from random.Random(seed) (Mersenne Twister), so a
(GenSpec, seed) pair pins the output exactly.  Models:

- uniform-random: endpoints drawn uniformly from [0, 4n], colors uniform in 1..k.
- proper-unit: unit-length intervals, left endpoints uniform in [0, 4n].
- greedy-adversarial: blocks of three intervals arranged so the greedy color
  picker keeps one color per block while the optimum keeps two.
- sat-derived: a random 3-bounded formula pushed through reduce_indset.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .cnf import CnfFormula
from .model import ColoredIntervalInstance, Interval
from .reductions import reduce_indset

MODELS = ("uniform-random", "proper-unit", "greedy-adversarial", "sat-derived")


@dataclass(frozen=True)
class GenSpec:
    n: int
    k: int
    seed: int
    model: str = "uniform-random"
    f_target: int | None = None


def generate(spec: GenSpec) -> ColoredIntervalInstance:
    if spec.model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}, got {spec.model!r}")
    if spec.n < 0 or spec.k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    rng = Random(spec.seed)
    if spec.model == "uniform-random":
        return _uniform_random(spec.n, spec.k, rng, spec.f_target)
    if spec.model == "proper-unit":
        return _proper_unit(spec.n, spec.k, rng)
    if spec.model == "greedy-adversarial":
        return _greedy_adversarial(spec.n)
    return reduce_indset(random_three_bounded(max(2, spec.n // 2), rng))[0]


def _uniform_random(
    n: int, k: int, rng: Random, f_target: int | None = None
) -> ColoredIntervalInstance:
    # with f_target, the first k*f_target intervals take round-robin colors so
    # every class is at least f_target large (when n allows); rest stay uniform
    span = 4 * n
    intervals = []
    for id in range(n):
        a = rng.randint(0, span)
        b = rng.randint(0, span)
        if f_target is not None and id < k * f_target:
            color = id % k + 1
        else:
            color = rng.randint(1, k)
        intervals.append(Interval(id=id, left=min(a, b), right=max(a, b), color=color))
    return ColoredIntervalInstance(k=k, intervals=tuple(intervals))


def _proper_unit(n: int, k: int, rng: Random) -> ColoredIntervalInstance:
    span = 4 * n
    intervals = []
    for id in range(n):
        left = rng.randint(0, span)
        intervals.append(
            Interval(id=id, left=left, right=left + 1, color=rng.randint(1, k))
        )
    return ColoredIntervalInstance(k=k, intervals=tuple(intervals), proper_flag=True)


def _greedy_adversarial(n: int) -> ColoredIntervalInstance:
    """Deterministic worst case for the greedy color picker.

    Block t (stride 8) holds A = [8t, 8t+2] and C = [8t+5, 8t+6] of one color
    and B = [8t+1, 8t+4] of another, both colors private to the block.  Greedy
    takes A (earliest right endpoint), which blocks B, and C repeats A's color:
    one color per block.  The optimum takes the disjoint pair B, C: two per
    block.  The requested n is rounded down to a whole number of blocks; the
    instance ends up with 2t colors for t blocks.
    """
    blocks = max(1, n // 3)
    intervals = []
    for t in range(blocks):
        base = 8 * t
        c_a, c_b = 2 * t + 1, 2 * t + 2
        intervals.append(Interval(id=3 * t, left=base, right=base + 2, color=c_a))
        intervals.append(Interval(id=3 * t + 1, left=base + 1, right=base + 4, color=c_b))
        intervals.append(Interval(id=3 * t + 2, left=base + 5, right=base + 6, color=c_a))
    return ColoredIntervalInstance(k=2 * blocks, intervals=tuple(intervals))


def random_three_bounded(
    num_vars: int, rng: Random, max_clauses: int | None = None
) -> CnfFormula:
    """Random formula with 2-3 literals per clause and at most three occurrences
    per variable.  Clause count is as drawn unless the occurrence budget runs dry."""
    if num_vars < 2:
        raise ValueError("need at least 2 variables to form a 2-literal clause")
    if max_clauses is None:
        max_clauses = max(1, num_vars)
    budget = {v: 3 for v in range(1, num_vars + 1)}
    clauses = []
    target = rng.randint(1, max_clauses)
    while len(clauses) < target:
        available = [v for v, b in budget.items() if b > 0]
        if len(available) < 2:
            break
        size = rng.choice((2, 3))
        size = min(size, len(available))
        chosen = rng.sample(available, size)
        clause = tuple(v if rng.random() < 0.5 else -v for v in sorted(chosen))
        for v in chosen:
            budget[v] -= 1
        clauses.append(clause)
    if not clauses:
        raise ValueError("could not form any clause")
    return CnfFormula.build(num_vars, clauses)


def random_tptn_uniform3(num_vars: int, rng: Random) -> CnfFormula:
    """Random formula over 3-literal clauses where every variable occurs exactly
    twice positively and twice negatively; num_vars must be a multiple of 3.

    Shuffles the 4n signed occurrence slots into clauses of three until every
    clause touches three distinct variables.
    """
    if num_vars <= 0 or num_vars % 3 != 0:
        raise ValueError("num_vars must be a positive multiple of 3")
    slots = []
    for v in range(1, num_vars + 1):
        slots.extend([v, v, -v, -v])
    while True:
        rng.shuffle(slots)
        groups = [slots[i : i + 3] for i in range(0, len(slots), 3)]
        if all(len({abs(l) for l in g}) == 3 for g in groups):
            clauses = [tuple(sorted(g, key=abs)) for g in groups]
            return CnfFormula.build(num_vars, clauses)
