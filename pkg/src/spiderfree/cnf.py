"""CNF formulas restricted to the 2P1N form, a DIMACS reader, and a DPLL solver.

In a 2P1N formula every variable occurs exactly twice positively and once
negatively, and every clause has two or three literals.
"""

from __future__ import annotations

import hashlib
from itertools import combinations
from dataclasses import dataclass

import numpy as np

from .errors import GraphParseError, ValidationError


@dataclass(frozen=True)
class CnfFormula:
    """Variables are 1..n; literals are signed non-zero integers (DIMACS style)."""

    n: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(int(x) for x in c) for c in self.clauses))
        for i, c in enumerate(self.clauses):
            for lit in c:
                if lit == 0 or abs(lit) > self.n:
                    raise ValidationError(f"clause {i + 1}: literal {lit} outside variables 1..{self.n}")

    def occurrences(self, var: int) -> tuple[int, int]:
        pos = sum(1 for c in self.clauses for lit in c if lit == var)
        neg = sum(1 for c in self.clauses for lit in c if lit == -var)
        return pos, neg

    def problems(self) -> list[str]:
        """Every way the formula violates the 2P1N form (empty when valid)."""
        out = []
        if self.n < 1:
            out.append("formula has no variables")
        for i, c in enumerate(self.clauses):
            if not 2 <= len(c) <= 3:
                out.append(f"clause {i + 1} has size {len(c)}; sizes 2 and 3 are allowed")
            if len(set(abs(x) for x in c)) != len(c):
                out.append(f"clause {i + 1} repeats a variable")
        for v in range(1, self.n + 1):
            pos, neg = self.occurrences(v)
            if (pos, neg) != (2, 1):
                out.append(f"variable {v} occurs {pos}x positively and {neg}x negatively; need 2 and 1")
        return out

    def validate(self) -> "CnfFormula":
        issues = self.problems()
        if issues:
            raise ValidationError("; ".join(issues))
        return self

    def is_valid(self) -> bool:
        return not self.problems()

    def satisfied_by(self, assignment: dict[int, bool]) -> bool:
        return all(any(assignment[abs(x)] == (x > 0) for x in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.n} {len(self.clauses)}"]
        lines += [" ".join(str(x) for x in c) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_dimacs().encode()).hexdigest()[:16]


def parse_cnf(text: str, validate: bool = True) -> CnfFormula:
    """Read DIMACS cnf; with ``validate`` the 2P1N form is enforced."""
    header = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise GraphParseError(f"bad header {line!r}", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise GraphParseError(f"bad header {line!r}", lineno) from None
            continue
        if header is None:
            raise GraphParseError("clause before 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise GraphParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if header is None:
        raise GraphParseError("missing 'p cnf' header", None)
    if current:
        raise GraphParseError("last clause is not terminated by 0", None)
    if len(clauses) != header[1]:
        raise ValidationError(f"header announces {header[1]} clauses, found {len(clauses)}")
    f = CnfFormula(header[0], tuple(clauses))
    return f.validate() if validate else f


def dpll(n: int, clauses) -> dict[int, bool] | None:
    """Plain DPLL with unit propagation; unassigned variables default to True."""
    clauses = [tuple(c) for c in clauses]

    def simplify(cls, lit):
        out = []
        for c in cls:
            if lit in c:
                continue
            if -lit in c:
                c = tuple(x for x in c if x != -lit)
            out.append(c)
        return out

    def rec(cls, assign):
        while True:
            if any(len(c) == 0 for c in cls):
                return None
            unit = next((c[0] for c in cls if len(c) == 1), None)
            if unit is None:
                break
            assign = {**assign, abs(unit): unit > 0}
            cls = simplify(cls, unit)
        if not cls:
            return assign
        var = min(abs(x) for c in cls for x in c)
        for lit in (var, -var):
            got = rec(simplify(cls, lit), {**assign, var: lit > 0})
            if got is not None:
                return got
        return None

    res = rec(clauses, {})
    if res is None:
        return None
    return {v: res.get(v, True) for v in range(1, n + 1)}


def sat_2p1n(phi: CnfFormula, validate: bool = True) -> dict[int, bool] | None:
    """Satisfying assignment of a 2P1N formula, or None."""
    if validate:
        phi.validate()
    return dpll(phi.n, phi.clauses)


def random_2p1n(n: int, seed: int, size2_prob: float = 0.3, tries: int = 1000) -> CnfFormula:
    """A random valid 2P1N formula on ``n`` variables (seeded).

    The 3n literal occurrences are shuffled and cut into clauses of size 2 or
    3; shuffles that put one variable twice into a clause are retried.
    """
    if n < 2:
        raise ValidationError("a 2P1N formula without repeated variables needs n >= 2")
    rng = np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)
    lits = [v for v in range(1, n + 1) for _ in range(2)] + [-v for v in range(1, n + 1)]
    for _ in range(tries):
        order = [lits[i] for i in rng.permutation(len(lits))]
        sizes = []
        left = len(order)
        while left:
            if left in (2, 3):
                s = left
            elif left == 4:
                s = 2
            else:
                s = 2 if rng.random() < size2_prob else 3
            sizes.append(s)
            left -= s
        clauses, pos = [], 0
        for s in sizes:
            clauses.append(tuple(order[pos:pos + s]))
            pos += s
        f = CnfFormula(n, tuple(clauses))
        if f.is_valid():
            return f
    raise ValidationError(f"could not sample a 2P1N formula with n={n}")


def _clause_splits(items: list[int]):
    """All ways to cut a literal list into clauses of size 2 or 3 (first item anchors each clause)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k in (1, 2):
        for comb in combinations(range(len(rest)), k):
            block = (first,) + tuple(rest[i] for i in comb)
            left = [rest[i] for i in range(len(rest)) if i not in comb]
            for tail in _clause_splits(left):
                yield [block] + tail


def enumerate_2p1n(n: int) -> list[CnfFormula]:
    """Every valid 2P1N formula on ``n`` variables, clauses and literals sorted, no duplicates."""
    lits = [v for v in range(1, n + 1) for _ in range(2)] + [-v for v in range(1, n + 1)]
    seen = set()
    out = []
    for split in _clause_splits(lits):
        key = tuple(sorted(tuple(sorted(c)) for c in split))
        if key in seen:
            continue
        seen.add(key)
        f = CnfFormula(n, key)
        if f.is_valid():
            out.append(f)
    return out
