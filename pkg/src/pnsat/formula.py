"""CNF formulas, DIMACS I/O and seeded uniform random k-SAT instances."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .rng import Xoshiro256


class DimacsError(ValueError):
    """Malformed DIMACS input; ``line`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class InvalidParameters(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Literal:
    var: int
    positive: bool = True

    def __post_init__(self):
        if self.var < 1:
            raise ValueError(f"variable index must be >= 1, got {self.var}")

    def __neg__(self) -> Literal:
        return Literal(self.var, not self.positive)

    def __int__(self) -> int:
        return self.var if self.positive else -self.var

    def __repr__(self) -> str:
        return f"{'' if self.positive else '~'}x{self.var}"

    @classmethod
    def from_int(cls, value: int) -> Literal:
        if value == 0:
            raise ValueError("0 is not a literal")
        return cls(abs(value), value > 0)


def normalize(literals: Iterable[Literal]) -> tuple[Literal, ...] | None:
    """Drop repeated literals (first occurrence wins); None for a tautology."""
    seen: dict[Literal, None] = {}
    for lit in literals:
        if -lit in seen:
            return None
        seen.setdefault(lit, None)
    return tuple(seen)


@dataclass(frozen=True)
class Clause:
    literals: tuple[Literal, ...]
    learned: bool = False

    def __post_init__(self):
        if normalize(self.literals) != tuple(self.literals):
            raise ValueError(f"clause is not normalized: {self.literals}")

    @classmethod
    def of(cls, *values: int, learned: bool = False) -> Clause:
        """Build from DIMACS integers, e.g. ``Clause.of(1, -3)``."""
        lits = normalize(Literal.from_int(v) for v in values)
        if lits is None:
            raise ValueError(f"tautological clause: {values}")
        return cls(lits, learned)

    def __len__(self) -> int:
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    def ints(self) -> list[int]:
        return [int(lit) for lit in self.literals]

    def same_literals(self, other: Clause) -> bool:
        return frozenset(self.literals) == frozenset(other.literals)


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[Clause, ...] = ()
    # number of tautological clauses removed while parsing
    dropped_tautologies: int = field(default=0, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))
        if self.num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        for clause in self.clauses:
            for lit in clause:
                if lit.var > self.num_vars:
                    raise ValueError(f"{lit!r} exceeds num_vars={self.num_vars}")

    @classmethod
    def from_ints(cls, num_vars: int, clauses: Iterable[Sequence[int]]) -> CnfFormula:
        return cls(num_vars, tuple(Clause.of(*c) for c in clauses))

    def clause_count(self) -> int:
        return len(self.clauses)

    def original_count(self) -> int:
        return sum(1 for c in self.clauses if not c.learned)

    def learned_count(self) -> int:
        return sum(1 for c in self.clauses if c.learned)

    def with_clauses(self, extra: Iterable[Clause]) -> CnfFormula:
        return CnfFormula(self.num_vars, self.clauses + tuple(extra))

    def as_ints(self) -> list[list[int]]:
        return [c.ints() for c in self.clauses]

    def equivalent_to(self, other: CnfFormula) -> bool:
        """Equality up to literal order within each clause."""
        return (self.num_vars == other.num_vars
                and len(self.clauses) == len(other.clauses)
                and all(a.same_literals(b) for a, b in zip(self.clauses, other.clauses)))

    def is_satisfied_by(self, model: dict[int, bool]) -> bool:
        return all(any(model.get(lit.var) == lit.positive for lit in c) for c in self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    if not text.strip():
        raise DimacsError("empty input")
    num_vars = num_clauses = None
    clauses: list[Clause] = []
    dropped = 0
    pending: list[int] = []
    pending_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if num_vars is not None:
                raise DimacsError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"malformed header {line!r}", lineno)
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"malformed header {line!r}", lineno) from None
            if num_vars < 0 or num_clauses < 0:
                raise DimacsError("negative counts in header", lineno)
            continue
        if num_vars is None:
            raise DimacsError("clause before 'p cnf' header", lineno)
        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                raise DimacsError(f"not an integer: {token!r}", lineno) from None
            if value == 0:
                lits = normalize(Literal.from_int(v) for v in pending)
                if lits is None:
                    dropped += 1
                else:
                    clauses.append(Clause(lits))
                pending = []
                continue
            if abs(value) > num_vars:
                raise DimacsError(f"literal {value} exceeds declared {num_vars} variables", lineno)
            if not pending:
                pending_line = lineno
            pending.append(value)
    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")
    if pending:
        raise DimacsError("clause not terminated by 0", pending_line)
    return CnfFormula(num_vars, tuple(clauses), dropped_tautologies=dropped)


def emit_dimacs(f: CnfFormula, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    lines.extend(" ".join(map(str, c.ints() + [0])) for c in f.clauses)
    return "\n".join(lines) + "\n"


def generate_ksat(n: int, m: int, k: int, seed: int) -> CnfFormula:
    """Uniform random k-SAT.

    For every clause, ``k`` distinct variables are drawn one at a time with
    ``below(n) + 1`` from a xoshiro256** stream seeded with ``seed``; repeats
    are redrawn. Each accepted variable is immediately followed by one draw
    whose top bit selects the sign (1 = negated). Clauses may repeat.
    """
    if not 1 <= k <= n:
        raise InvalidParameters(f"need 1 <= k <= n, got k={k}, n={n}")
    if m < 0:
        raise InvalidParameters(f"clause count must be >= 0, got {m}")
    rng = Xoshiro256(seed)
    clauses = []
    for _ in range(m):
        chosen: set[int] = set()
        lits = []
        while len(lits) < k:
            v = rng.below(n) + 1
            if v in chosen:
                continue
            chosen.add(v)
            lits.append(Literal(v, not rng.coin()))
        clauses.append(Clause(tuple(lits)))
    return CnfFormula(n, tuple(clauses))


def avg_clause_len(f: CnfFormula) -> Fraction:
    if not f.clauses:
        raise ValueError("average clause length of an empty formula is undefined")
    return Fraction(sum(len(c) for c in f.clauses), len(f.clauses))


EXAMPLE_CLAUSES = [
    [-1, -2], [-1, 3], [-3, -4], [2, 4, 5], [-5, 6, -7], [2, 7, 8],
    [-8, -9], [-8, 10], [9, -10, 11], [-10, -12], [-11, 12],
]


def example_formula() -> CnfFormula:
    """The 12-variable, 11-clause worked instance used throughout the docs."""
    return CnfFormula.from_ints(12, EXAMPLE_CLAUSES)
