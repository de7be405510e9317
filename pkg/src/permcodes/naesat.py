"""Exact-3-literal NAESAT instances, DIMACS I/O and a brute-force oracle."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import InstanceTooLargeError, InvalidAssignmentError, InvalidInstanceError, ParseError

BRUTE_FORCE_MAX_VARS = 24


@dataclass(frozen=True)
class Literal:
    variable: int
    negated: bool = False

    def __post_init__(self):
        if self.variable < 1:
            raise InvalidInstanceError(f"variable index must be >= 1, got {self.variable}")

    @classmethod
    def from_int(cls, k: int) -> Literal:
        if k == 0:
            raise ValueError("0 is not a literal")
        return cls(abs(k), k < 0)

    def to_int(self) -> int:
        return -self.variable if self.negated else self.variable

    def value(self, assignment: Sequence[bool]) -> bool:
        return assignment[self.variable - 1] != self.negated

    def __str__(self):
        return f"~x{self.variable}" if self.negated else f"x{self.variable}"


Clause = tuple[Literal, Literal, Literal]


@dataclass(frozen=True)
class CnfFormula:
    """Ordered exact-3-literal clauses over ``num_vars`` variables.

    Slot order inside a clause matters to the reduction (slot k selects
    h_k), so clauses are kept exactly as given, duplicates included.
    """

    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        if self.num_vars < 0:
            raise InvalidInstanceError("num_vars must be non-negative")
        clauses = tuple(tuple(c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for j, clause in enumerate(clauses, 1):
            if len(clause) != 3:
                raise InvalidInstanceError(f"clause {j} has {len(clause)} literals, expected 3")
            for lit in clause:
                if lit.variable > self.num_vars:
                    raise InvalidInstanceError(
                        f"clause {j} uses x{lit.variable} but num_vars={self.num_vars}"
                    )

    @classmethod
    def from_ints(cls, num_vars: int, clauses) -> CnfFormula:
        return cls(num_vars, tuple(tuple(Literal.from_int(k) for k in c) for c in clauses))

    @property
    def m(self) -> int:
        return len(self.clauses)

    @property
    def n(self) -> int:
        return self.num_vars

    def __str__(self):
        return " & ".join("(" + " | ".join(map(str, c)) + ")" for c in self.clauses)


@dataclass(frozen=True)
class Assignment:
    values: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(bool(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def complement(self) -> Assignment:
        return Assignment(tuple(not v for v in self.values))

    def to_dimacs(self) -> str:
        return " ".join(str(i if v else -i) for i, v in enumerate(self.values, 1))

    def __str__(self):
        return "".join("T" if v else "F" for v in self.values)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF where every clause has exactly three literals.

    A clause may span lines; each clause ends with ``0``. Line numbers in
    errors are 1-based.
    """
    header = None
    clauses: list[list[int]] = []
    current: list[int] = []
    current_line = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise ParseError("duplicate problem line", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"bad problem line {line!r}", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"bad problem line {line!r}", lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative counts in problem line", lineno)
            continue
        if header is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        for tok in line.split():
            try:
                k = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if current_line is None:
                current_line = lineno
            if k == 0:
                if len(current) != 3:
                    raise ParseError(f"clause has {len(current)} literals, expected 3", current_line)
                clauses.append(current)
                current, current_line = [], None
                continue
            if abs(k) > header[0]:
                raise ParseError(f"variable {abs(k)} exceeds declared count {header[0]}", lineno)
            current.append(k)
            if len(current) > 3:
                raise ParseError("clause has more than 3 literals", current_line)
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        raise ParseError("last clause is not terminated by 0", current_line)
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula.from_ints(header[0], clauses)


def to_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {f.m}"]
    for clause in f.clauses:
        lines.append(" ".join(str(lit.to_int()) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def _check_length(f: CnfFormula, a) -> None:
    if len(a) != f.num_vars:
        raise InvalidAssignmentError(f"assignment has {len(a)} values, formula has {f.num_vars} variables")


def is_nae_satisfied(f: CnfFormula, a: Assignment | Sequence[bool]) -> bool:
    _check_length(f, a)
    for clause in f.clauses:
        vals = {lit.value(a) for lit in clause}
        if len(vals) != 2:
            return False
    return True


def solve_nae_bruteforce(f: CnfFormula) -> Assignment | None:
    """First NAE-satisfying assignment in lexicographic order (F < T, x1 most significant)."""
    if f.num_vars > BRUTE_FORCE_MAX_VARS:
        raise InstanceTooLargeError(
            f"{f.num_vars} variables exceeds brute-force limit {BRUTE_FORCE_MAX_VARS}"
        )
    for values in itertools.product((False, True), repeat=f.num_vars):
        if is_nae_satisfied(f, values):
            return Assignment(values)
    return None


def all_assignments(n: int):
    for values in itertools.product((False, True), repeat=n):
        yield Assignment(values)


def random_formula(rng: random.Random, n: int, m: int) -> CnfFormula:
    """Each of the 3m slots gets a uniform variable and a fair-coin sign."""
    clauses = [
        [rng.randint(1, n) * rng.choice((1, -1)) for _ in range(3)] for _ in range(m)
    ]
    return CnfFormula.from_ints(n, clauses)


CAMWU_FORMULA = CnfFormula.from_ints(2, [[1, 2, 2], [-1, 2, 2]])
