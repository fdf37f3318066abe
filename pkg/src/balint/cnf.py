"""CNF formulas, DIMACS parsing, and the occurrence-restricted flavors.

A literal is a signed nonzero int; a clause is a tuple of literals over
distinct variables.  Flavors: ``three_bounded`` (every variable occurs in at
most three clauses, every clause has two or three literals), ``tptn`` (every
variable occurs exactly twice positively and twice negatively, clauses have
one to three literals), else ``general``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import FormatError

FLAVORS = ("tptn", "three_bounded", "general")


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    flavor: str

    @staticmethod
    def build(num_vars: int, clauses) -> "CnfFormula":
        """Validate and classify.  Rejects empty clauses, out-of-range literals,
        and clauses mentioning a variable twice (gadgets need one vertex per
        variable occurrence per clause)."""
        if num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        normalized = []
        for idx, clause in enumerate(clauses, start=1):
            lits = tuple(int(l) for l in clause)
            if not lits:
                raise ValueError(f"clause {idx} is empty")
            seen_vars = set()
            for lit in lits:
                var = abs(lit)
                if lit == 0 or var > num_vars:
                    raise ValueError(f"clause {idx}: literal {lit} out of range")
                if var in seen_vars:
                    raise ValueError(f"clause {idx}: variable x{var} appears twice")
                seen_vars.add(var)
            normalized.append(lits)
        phi = tuple(normalized)
        return CnfFormula(num_vars=num_vars, clauses=phi, flavor=_classify(num_vars, phi))

    def occurrences(self, var: int) -> tuple[list[int], list[int]]:
        """(positive clause indices, negative clause indices), 1-based, ascending."""
        pos, neg = [], []
        for j, clause in enumerate(self.clauses, start=1):
            for lit in clause:
                if lit == var:
                    pos.append(j)
                elif lit == -var:
                    neg.append(j)
        return pos, neg


def _classify(num_vars: int, clauses) -> str:
    pos = [0] * (num_vars + 1)
    neg = [0] * (num_vars + 1)
    sizes = []
    for clause in clauses:
        sizes.append(len(clause))
        for lit in clause:
            if lit > 0:
                pos[lit] += 1
            else:
                neg[-lit] += 1
    if all(s <= 3 for s in sizes) and all(
        pos[v] == 2 and neg[v] == 2 for v in range(1, num_vars + 1)
    ):
        return "tptn"
    if all(s in (2, 3) for s in sizes) and all(
        pos[v] + neg[v] <= 3 for v in range(1, num_vars + 1)
    ):
        return "three_bounded"
    return "general"


def is_three_bounded(phi: CnfFormula) -> bool:
    """Acceptable input for the independent-set reduction (includes the empty formula)."""
    counts = [0] * (phi.num_vars + 1)
    for clause in phi.clauses:
        if len(clause) not in (2, 3):
            return False
        for lit in clause:
            counts[abs(lit)] += 1
    return all(c <= 3 for c in counts)


def is_tptn(phi: CnfFormula) -> bool:
    """Acceptable input for the dominating-set reduction (includes the empty formula)."""
    pos = [0] * (phi.num_vars + 1)
    neg = [0] * (phi.num_vars + 1)
    for clause in phi.clauses:
        if not 1 <= len(clause) <= 3:
            return False
        for lit in clause:
            if lit > 0:
                pos[lit] += 1
            else:
                neg[-lit] += 1
    return all(pos[v] == 2 and neg[v] == 2 for v in range(1, phi.num_vars + 1))


def evaluate(phi: CnfFormula, assignment: dict[int, bool]) -> bool:
    """True iff every clause has a true literal; unassigned variables are false."""
    for clause in phi.clauses:
        if not any(
            assignment.get(abs(lit), False) == (lit > 0) for lit in clause
        ):
            return False
    return True


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF.  Clauses may span lines; 0 terminates a clause."""
    num_vars = None
    declared_clauses = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise FormatError("duplicate problem line", no)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError("problem line must be 'p cnf <vars> <clauses>'", no)
            try:
                num_vars, declared_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError("problem line counts must be integers", no) from None
            continue
        if num_vars is None:
            raise FormatError("clause before problem line", no)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise FormatError(f"bad literal {token!r}", no) from None
            if lit == 0:
                if not pending:
                    # SATLIB files end with "%" and a lone "0"; tolerate that
                    # tail once every declared clause has been read.
                    if declared_clauses is not None and len(clauses) >= declared_clauses:
                        continue
                    raise FormatError("empty clause", no)
                clauses.append(tuple(pending))
                pending.clear()
            else:
                pending.append(lit)
    if num_vars is None:
        raise FormatError("missing problem line")
    if pending:
        raise FormatError("unterminated clause at end of input")
    if declared_clauses is not None and len(clauses) != declared_clauses:
        raise FormatError(
            f"problem line declares {declared_clauses} clauses but found {len(clauses)}"
        )
    try:
        return CnfFormula.build(num_vars, clauses)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_dimacs(phi: CnfFormula) -> str:
    rows = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    rows.extend(" ".join(str(l) for l in clause) + " 0" for clause in phi.clauses)
    return "\n".join(rows) + "\n"
