"""Shared builders for the test suite."""

from __future__ import annotations

from random import Random

from hypothesis import strategies as st

from balint import ColoredIntervalInstance, Interval


def build_instance(
    k: int, triples: list[tuple[int, int, int]], proper: bool = False
) -> ColoredIntervalInstance:
    """Instance from (left, right, color) triples; ids follow list order."""
    intervals = tuple(
        Interval(id=i, left=a, right=b, color=c) for i, (a, b, c) in enumerate(triples)
    )
    return ColoredIntervalInstance(k=k, intervals=intervals, proper_flag=proper)


def random_triples(rng: Random, n: int, k: int, span: int | None = None):
    span = 4 * n + 1 if span is None else span
    out = []
    for _ in range(n):
        a = rng.randint(0, span)
        b = rng.randint(0, span)
        out.append((min(a, b), max(a, b), rng.randint(1, k)))
    return out


def random_instance(rng: Random, n: int, k: int) -> ColoredIntervalInstance:
    return build_instance(k, random_triples(rng, n, k))


@st.composite
def instances(draw, max_n: int = 24, max_k: int = 4, span: int = 50):
    n = draw(st.integers(min_value=0, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=max_k))
    triples = []
    for _ in range(n):
        a = draw(st.integers(min_value=0, max_value=span))
        b = draw(st.integers(min_value=0, max_value=span))
        c = draw(st.integers(min_value=1, max_value=k))
        triples.append((min(a, b), max(a, b), c))
    return build_instance(k, triples)


def brute_intersects(a: Interval, b: Interval) -> bool:
    """Reference overlap test by point enumeration over the integer grid."""
    return bool(set(range(a.left, a.right + 1)) & set(range(b.left, b.right + 1)))


def independent_pairs_ok(inst: ColoredIntervalInstance, ids) -> bool:
    from balint import intersects

    members = [inst.interval(i) for i in ids]
    return all(
        not intersects(members[i], members[j])
        for i in range(len(members))
        for j in range(i + 1, len(members))
    )
