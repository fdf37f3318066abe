"""CNF reductions to balanced interval problems, plus decode/encode bridges.

reduce_indset maps a 3-bounded formula to a proper interval instance with one
vertex per literal occurrence and one color per clause: the instance has a
1-balanced independent set iff the formula is satisfiable.  Per variable the
positive and negative occurrences form a complete bipartite gadget, which
under the occurrence bound is an isolated vertex, an edge, or a 3-vertex path
with the minority polarity in the middle; each connected component is laid
out from a template at its own offset.

reduce_domset maps a formula whose every variable occurs exactly twice
positively and twice negatively to a proper interval instance with five
colors per variable: a 6-vertex variable gadget (two leaf-hub-leaf paths) plus
a clique of up to three vertices per clause.  The instance has a 1-balanced
dominating set iff the formula is satisfiable.

A GadgetMetadata sidecar records the role of every interval, the per-variable
vertex ids and clause incidences, and the source formula, so solutions can be
decoded to assignments and assignments encoded back to solutions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .bds import canonicalize_bds
from .cnf import CnfFormula, is_three_bounded, is_tptn
from .model import (
    ColoredIntervalInstance,
    Interval,
    SolutionSet,
    intersects,
    solution_from_ids,
    verify_solution,
)

COMPONENT_STRIDE = 100

EDGE_COORDS = ((0, 4), (2, 6))
PATH_COORDS = ((0, 4), (2, 6), (5, 9))  # middle vertex is the (2, 6) one
TRIANGLE_COORDS = ((0, 4), (1, 5), (2, 6))
SINGLETON_COORDS = ((0, 4),)


@dataclass(frozen=True)
class OccurrenceRole:
    """Independent-set reduction: the interval stands for one literal occurrence."""

    variable: int
    clause: int
    positive: bool


@dataclass(frozen=True)
class HubRole:
    """Dominating-set reduction: a variable-gadget vertex (t1, t2, f1, f2, h_t, h_f)."""

    variable: int
    name: str


@dataclass(frozen=True)
class ClauseRole:
    """Dominating-set reduction: a clause-clique vertex; slot says whether this
    is the variable's first or second occurrence of that polarity."""

    clause: int
    variable: int
    positive: bool
    slot: int


@dataclass(frozen=True)
class VariableGadget:
    """Ids of the ten intervals tied to one variable in the domset reduction."""

    t1: int
    t2: int
    f1: int
    f2: int
    h_t: int
    h_f: int
    c_t1: int
    c_t2: int
    c_f1: int
    c_f2: int
    pos_clauses: tuple[int, int]
    neg_clauses: tuple[int, int]


@dataclass(frozen=True)
class GadgetMetadata:
    kind: str  # "indset" | "domset"
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    roles: dict[int, object] = field(default_factory=dict)
    variable_gadgets: dict[int, VariableGadget] = field(default_factory=dict)

    def formula(self) -> CnfFormula:
        return CnfFormula.build(self.num_vars, self.clauses)

    def occurrence_id(self, variable: int, clause: int) -> int:
        for id, role in self.roles.items():
            if (
                isinstance(role, OccurrenceRole)
                and role.variable == variable
                and role.clause == clause
            ):
                return id
        raise KeyError(f"no occurrence of x{variable} in clause {clause}")

    def to_json_dict(self) -> dict:
        roles = {}
        for id, role in self.roles.items():
            if isinstance(role, OccurrenceRole):
                roles[str(id)] = {
                    "type": "occurrence",
                    "variable": role.variable,
                    "clause": role.clause,
                    "positive": role.positive,
                }
            elif isinstance(role, HubRole):
                roles[str(id)] = {"type": "var", "variable": role.variable, "name": role.name}
            else:
                roles[str(id)] = {
                    "type": "clause",
                    "clause": role.clause,
                    "variable": role.variable,
                    "positive": role.positive,
                    "slot": role.slot,
                }
        gadgets = {
            str(var): {
                "t1": g.t1,
                "t2": g.t2,
                "f1": g.f1,
                "f2": g.f2,
                "h_t": g.h_t,
                "h_f": g.h_f,
                "c_t1": g.c_t1,
                "c_t2": g.c_t2,
                "c_f1": g.c_f1,
                "c_f2": g.c_f2,
                "pos_clauses": list(g.pos_clauses),
                "neg_clauses": list(g.neg_clauses),
            }
            for var, g in self.variable_gadgets.items()
        }
        return {
            "kind": self.kind,
            "num_vars": self.num_vars,
            "clauses": [list(c) for c in self.clauses],
            "roles": roles,
            "variable_gadgets": gadgets,
        }

    @staticmethod
    def from_json_dict(data: dict) -> "GadgetMetadata":
        roles: dict[int, object] = {}
        for id_text, entry in data.get("roles", {}).items():
            id = int(id_text)
            if entry["type"] == "occurrence":
                roles[id] = OccurrenceRole(
                    variable=entry["variable"],
                    clause=entry["clause"],
                    positive=entry["positive"],
                )
            elif entry["type"] == "var":
                roles[id] = HubRole(variable=entry["variable"], name=entry["name"])
            else:
                roles[id] = ClauseRole(
                    clause=entry["clause"],
                    variable=entry["variable"],
                    positive=entry["positive"],
                    slot=entry["slot"],
                )
        gadgets = {
            int(var): VariableGadget(
                t1=g["t1"],
                t2=g["t2"],
                f1=g["f1"],
                f2=g["f2"],
                h_t=g["h_t"],
                h_f=g["h_f"],
                c_t1=g["c_t1"],
                c_t2=g["c_t2"],
                c_f1=g["c_f1"],
                c_f2=g["c_f2"],
                pos_clauses=tuple(g["pos_clauses"]),
                neg_clauses=tuple(g["neg_clauses"]),
            )
            for var, g in data.get("variable_gadgets", {}).items()
        }
        return GadgetMetadata(
            kind=data["kind"],
            num_vars=data["num_vars"],
            clauses=tuple(tuple(c) for c in data["clauses"]),
            roles=roles,
            variable_gadgets=gadgets,
        )


class _Builder:
    """Accumulates intervals component by component, spacing components apart."""

    def __init__(self):
        self.intervals: list[Interval] = []
        self.components = 0

    def add_component(self, coords, colors) -> list[int]:
        base = self.components * COMPONENT_STRIDE
        self.components += 1
        ids = []
        for (left, right), color in zip(coords, colors):
            id = len(self.intervals)
            self.intervals.append(
                Interval(id=id, left=base + left, right=base + right, color=color)
            )
            ids.append(id)
        return ids


def reduce_indset(phi: CnfFormula) -> tuple[ColoredIntervalInstance, GadgetMetadata]:
    """Build the independent-set instance and its metadata from a 3-bounded formula.

    Vertex count equals the total number of literal occurrences; color count
    equals the clause count.  The implied intersection graph consists of one
    complete bipartite gadget (positive vs negative occurrences) per variable.
    """
    if not is_three_bounded(phi):
        raise ValueError("formula is not 3-bounded (clauses of 2-3 literals, "
                         "each variable in at most 3 clauses)")
    builder = _Builder()
    roles: dict[int, object] = {}

    def emit(coords, occurrences):
        ids = builder.add_component(coords, [j for j, _ in occurrences])
        for id, (j, positive) in zip(ids, occurrences):
            roles[id] = OccurrenceRole(variable=var, clause=j, positive=positive)

    for var in range(1, phi.num_vars + 1):
        pos, neg = phi.occurrences(var)
        if pos and neg:
            if len(pos) + len(neg) == 2:
                emit(EDGE_COORDS, [(pos[0], True), (neg[0], False)])
            elif len(pos) == 2:
                emit(PATH_COORDS, [(pos[0], True), (neg[0], False), (pos[1], True)])
            else:
                emit(PATH_COORDS, [(neg[0], False), (pos[0], True), (neg[1], False)])
        else:
            for j in pos:
                emit(SINGLETON_COORDS, [(j, True)])
            for j in neg:
                emit(SINGLETON_COORDS, [(j, False)])
    inst = ColoredIntervalInstance(
        k=len(phi.clauses), intervals=tuple(builder.intervals), proper_flag=True
    )
    assert inst.n == sum(len(c) for c in phi.clauses)
    meta = GadgetMetadata(
        kind="indset", num_vars=phi.num_vars, clauses=phi.clauses, roles=roles
    )
    return inst, meta


def reduce_domset(phi: CnfFormula) -> tuple[ColoredIntervalInstance, GadgetMetadata]:
    """Build the dominating-set instance and its metadata from a 2P2N formula.

    Per variable: colors (z_t1, z_t2, z_f1, z_f2, z_h), a leaf-hub-leaf path
    t1 - h_t - t2 and another f1 - h_f - f2, with gamma(h_t) = gamma(h_f) = z_h.
    Per clause: a clique of one vertex per literal, each sharing the color of
    the matching variable leaf (z_t for positive occurrences, z_f for negative).
    For 3-literal clauses throughout, the instance has 6n + 3m vertices and
    4n + 3m edges; shorter clauses contribute proportionally fewer.
    """
    if not is_tptn(phi):
        raise ValueError("formula is not 2P2N (every variable exactly twice "
                         "positive and twice negative, clauses of 1-3 literals)")
    builder = _Builder()
    roles: dict[int, object] = {}
    gadget_parts: dict[int, dict] = {}

    def z(var: int, part: int) -> int:
        # parts: 1 = z_t1, 2 = z_t2, 3 = z_f1, 4 = z_f2, 5 = z_h
        return 5 * (var - 1) + part

    for var in range(1, phi.num_vars + 1):
        pos, neg = phi.occurrences(var)
        t1, h_t, t2 = builder.add_component(
            PATH_COORDS, [z(var, 1), z(var, 5), z(var, 2)]
        )
        f1, h_f, f2 = builder.add_component(
            PATH_COORDS, [z(var, 3), z(var, 5), z(var, 4)]
        )
        for id, name in ((t1, "t1"), (h_t, "h_t"), (t2, "t2"), (f1, "f1"), (h_f, "h_f"), (f2, "f2")):
            roles[id] = HubRole(variable=var, name=name)
        gadget_parts[var] = {
            "t1": t1, "t2": t2, "f1": f1, "f2": f2, "h_t": h_t, "h_f": h_f,
            "pos_clauses": tuple(pos), "neg_clauses": tuple(neg),
        }
    for j, clause in enumerate(phi.clauses, start=1):
        coords = {3: TRIANGLE_COORDS, 2: EDGE_COORDS, 1: SINGLETON_COORDS}[len(clause)]
        colors = []
        slots = []
        for lit in clause:
            var, positive = abs(lit), lit > 0
            occurrences = gadget_parts[var]["pos_clauses" if positive else "neg_clauses"]
            slot = 1 if occurrences[0] == j else 2
            colors.append(z(var, (1 if positive else 3) + slot - 1))
            slots.append((var, positive, slot))
        ids = builder.add_component(coords, colors)
        for id, (var, positive, slot) in zip(ids, slots):
            roles[id] = ClauseRole(clause=j, variable=var, positive=positive, slot=slot)
            key = ("c_t" if positive else "c_f") + str(slot)
            gadget_parts[var][key] = id
    gadgets = {
        var: VariableGadget(**parts) for var, parts in gadget_parts.items()
    }
    inst = ColoredIntervalInstance(
        k=5 * phi.num_vars, intervals=tuple(builder.intervals), proper_flag=True
    )
    assert inst.n == 6 * phi.num_vars + sum(len(c) for c in phi.clauses)
    assert _edge_count(inst) == 4 * phi.num_vars + sum(
        len(c) * (len(c) - 1) // 2 for c in phi.clauses
    )
    meta = GadgetMetadata(
        kind="domset",
        num_vars=phi.num_vars,
        clauses=phi.clauses,
        roles=roles,
        variable_gadgets=gadgets,
    )
    return inst, meta


def _edge_count(inst: ColoredIntervalInstance) -> int:
    return sum(
        1 for a, b in combinations(inst.intervals, 2) if intersects(a, b)
    )


def decode_indset(
    inst: ColoredIntervalInstance, meta: GadgetMetadata, sol: SolutionSet
) -> dict[int, bool]:
    """Read an assignment off a valid 1-balanced independent set: a variable is
    true iff one of its positive-occurrence intervals was selected."""
    if meta.kind != "indset":
        raise ValueError("metadata does not describe an independent-set reduction")
    verdict = verify_solution(inst, sol, 1)
    if not verdict.valid:
        raise ValueError(f"solution is not a valid 1-balanced independent set: {verdict.reason}")
    assignment = {var: False for var in range(1, meta.num_vars + 1)}
    for id in sol.ids:
        role = meta.roles[id]
        if role.positive:
            assignment[role.variable] = True
    return assignment


def encode_indset_solution(
    inst: ColoredIntervalInstance, meta: GadgetMetadata, assignment: dict[int, bool]
) -> SolutionSet:
    """Pick, per clause, the interval of its first true literal.  Raises
    ValueError when the assignment leaves a clause unsatisfied."""
    if meta.kind != "indset":
        raise ValueError("metadata does not describe an independent-set reduction")
    ids = []
    for j, clause in enumerate(meta.clauses, start=1):
        chosen = None
        for lit in clause:
            if assignment.get(abs(lit), False) == (lit > 0):
                chosen = meta.occurrence_id(abs(lit), j)
                break
        if chosen is None:
            raise ValueError(f"assignment does not satisfy clause {j}")
        ids.append(chosen)
    sol = solution_from_ids(inst, "BIS", ids)
    verdict = verify_solution(inst, sol, 1)
    assert verdict.valid, verdict.reason
    return sol


def decode_domset(
    inst: ColoredIntervalInstance, meta: GadgetMetadata, sol: SolutionSet
) -> dict[int, bool]:
    """Canonicalize a valid 1-balanced dominating set, then read the assignment
    off the hubs: a variable is true iff its true-side hub is selected."""
    canonical = canonicalize_bds(inst, meta, sol)
    return {
        var: meta.variable_gadgets[var].h_t in canonical.ids
        for var in range(1, meta.num_vars + 1)
    }


def encode_domset_solution(
    inst: ColoredIntervalInstance, meta: GadgetMetadata, assignment: dict[int, bool]
) -> SolutionSet:
    """Canonical dominating set of a satisfying assignment: per true variable
    {h_t, f1, f2, c_t1, c_t2}, per false variable {h_f, t1, t2, c_f1, c_f2}."""
    if meta.kind != "domset":
        raise ValueError("metadata does not describe a dominating-set reduction")
    for j, clause in enumerate(meta.clauses, start=1):
        if not any(assignment.get(abs(lit), False) == (lit > 0) for lit in clause):
            raise ValueError(f"assignment does not satisfy clause {j}")
    ids = []
    for var in range(1, meta.num_vars + 1):
        g = meta.variable_gadgets[var]
        if assignment.get(var, False):
            ids.extend([g.h_t, g.f1, g.f2, g.c_t1, g.c_t2])
        else:
            ids.extend([g.h_f, g.t1, g.t2, g.c_f1, g.c_f2])
    sol = solution_from_ids(inst, "BDS", ids)
    verdict = verify_solution(inst, sol, 1)
    assert verdict.valid, verdict.reason
    return sol
