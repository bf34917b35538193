"""3-SAT / MAX-3-SAT instances: representation, DIMACS I/O, random generation,
literal statistics, and an exact brute-force MAX-3-SAT oracle.

Variables are 0-indexed internally; DIMACS uses 1-based signed ids
(internal var = |id| - 1, negated iff id < 0).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from ._backend import kernels


class FormulaError(ValueError):
    """Invalid formula construction (bad indices, arity, strictness)."""


class DimacsError(FormulaError):
    """Malformed DIMACS CNF input."""


@dataclass(frozen=True, order=True)
class Literal:
    var: int
    negated: bool = False

    def __post_init__(self):
        if self.var < 0:
            raise FormulaError(f"negative variable index {self.var}")

    def complement(self) -> "Literal":
        return Literal(self.var, not self.negated)

    def to_dimacs(self) -> int:
        return -(self.var + 1) if self.negated else self.var + 1

    @classmethod
    def from_dimacs(cls, ident: int) -> "Literal":
        if ident == 0:
            raise FormulaError("literal id 0 is reserved as clause terminator")
        return cls(abs(ident) - 1, ident < 0)

    def __repr__(self):
        return f"{'~' if self.negated else ''}v{self.var}"


@dataclass(frozen=True)
class Clause:
    lits: tuple[Literal, Literal, Literal]

    def __post_init__(self):
        if len(self.lits) != 3:
            raise FormulaError(f"clause arity {len(self.lits)} != 3")

    @property
    def variables(self) -> tuple[int, int, int]:
        return tuple(l.var for l in self.lits)

    def is_strict(self) -> bool:
        return len(set(self.variables)) == 3

    def negation_count(self) -> int:
        return sum(l.negated for l in self.lits)

    def satisfied(self, values) -> bool:
        return any(values[l.var] != l.negated for l in self.lits)

    def __iter__(self):
        return iter(self.lits)


def clause(*lits: Literal | int) -> Clause:
    """Build a clause from Literals or DIMACS-style signed ints."""
    out = tuple(l if isinstance(l, Literal) else Literal.from_dimacs(l) for l in lits)
    return Clause(out)


@dataclass(frozen=True)
class Formula:
    n: int
    clauses: tuple[Clause, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))
        for c in self.clauses:
            for l in c:
                if l.var >= self.n:
                    raise FormulaError(f"literal {l} out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def is_strict(self) -> bool:
        return all(c.is_strict() for c in self.clauses)

    def require_strict(self):
        for k, c in enumerate(self.clauses):
            if not c.is_strict():
                raise FormulaError(f"clause {k} repeats a variable: {c.lits}")


def normalize_clause(c: Clause) -> Clause:
    """Reorder literals so positives precede negated ones (stable)."""
    pos = tuple(l for l in c.lits if not l.negated)
    neg = tuple(l for l in c.lits if l.negated)
    return Clause(pos + neg)


def literal_index(l: Literal) -> int:
    """Position of l in the literal list (v0, ~v0, v1, ~v1, ...)."""
    return 2 * l.var + (1 if l.negated else 0)


def count_single(f: Formula, l: Literal) -> int:
    """Number of clauses containing literal l."""
    return sum(1 for c in f.clauses if l in c.lits)


def count_pair(f: Formula, l1: Literal, l2: Literal) -> int:
    """Number of clauses containing both l1 and l2."""
    if l1 == l2:
        raise FormulaError("count_pair requires two distinct literals")
    return sum(1 for c in f.clauses if l1 in c.lits and l2 in c.lits)


def satisfied_count(f: Formula, values) -> int:
    if len(values) != f.n:
        raise FormulaError(f"assignment length {len(values)} != n={f.n}")
    return sum(1 for c in f.clauses if c.satisfied(values))


# ---------------------------------------------------------------------------
# DIMACS CNF


def parse_dimacs(text: str, strict: bool = True) -> Formula:
    """Parse DIMACS CNF text into a Formula.

    Raises DimacsError on malformed headers, non-3 clause arity, out-of-range
    variables, or a clause count that disagrees with the header. With
    strict=True (default), clauses repeating a variable are rejected too.
    """
    n = None
    m_declared = None
    tokens: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("p"):
            if n is not None:
                raise DimacsError(f"line {lineno}: duplicate header")
            parts = stripped.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {stripped!r}")
            try:
                n, m_declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {stripped!r}") from None
            if n < 0 or m_declared < 0:
                raise DimacsError(f"line {lineno}: negative counts in header")
            continue
        if n is None:
            raise DimacsError(f"line {lineno}: clause data before header")
        try:
            tokens.extend(int(t) for t in stripped.split())
        except ValueError:
            raise DimacsError(f"line {lineno}: non-integer clause token") from None

    if n is None:
        raise DimacsError("missing 'p cnf' header")

    clauses = []
    current: list[Literal] = []
    for t in tokens:
        if t == 0:
            if len(current) != 3:
                raise DimacsError(f"clause {len(clauses)}: arity {len(current)} != 3")
            clauses.append(Clause(tuple(current)))
            current = []
        else:
            lit = Literal.from_dimacs(t)
            if lit.var >= n:
                raise DimacsError(f"variable id {t} out of range (n={n})")
            current.append(lit)
    if current:
        raise DimacsError("unterminated clause (missing trailing 0)")
    if len(clauses) != m_declared:
        raise DimacsError(f"header declares {m_declared} clauses, found {len(clauses)}")

    f = Formula(n, tuple(clauses))
    if strict:
        f.require_strict()
    return f


def write_dimacs(f: Formula) -> str:
    lines = [f"p cnf {f.n} {f.m}"]
    for c in f.clauses:
        lines.append(" ".join(str(l.to_dimacs()) for l in c) + " 0")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Random instances


def critical_clause_count(n: int, ratio: float = 4.2) -> int:
    """Clause count at the hard random-3-SAT regime, m = ceil(ratio * n)."""
    return math.ceil(ratio * n)


def random_3sat(n: int, m: int, seed: int) -> Formula:
    """Random strict 3-SAT formula: each clause picks 3 distinct variables
    uniformly without replacement, each literal negated by a fair coin.
    Deterministic for a given seed.
    """
    if n < 3:
        raise FormulaError("random_3sat needs n >= 3 for strict clauses")
    if m < 0:
        raise FormulaError("clause count must be non-negative")
    rng = random.Random(seed)
    clauses = []
    for _ in range(m):
        vs = rng.sample(range(n), 3)
        clauses.append(Clause(tuple(Literal(v, rng.random() < 0.5) for v in vs)))
    return Formula(n, tuple(clauses))


# ---------------------------------------------------------------------------
# Exact MAX-3-SAT oracle


def _clause_masks(f: Formula) -> tuple[list[int], list[int]]:
    """Per-clause positive/negative variable bitmasks.

    Bit layout matches the oracle's lexicographic enumeration: variable j sits
    at bit (n - 1 - j), so index 0 is the most significant bit.
    """
    pos, neg = [], []
    for c in f.clauses:
        p = q = 0
        for l in c:
            bit = 1 << (f.n - 1 - l.var)
            if l.negated:
                q |= bit
            else:
                p |= bit
        pos.append(p)
        neg.append(q)
    return pos, neg


def maxsat_bruteforce(f: Formula, cap: int = 24) -> tuple[int, list[bool]]:
    """Exact MAX-3-SAT optimum by exhaustive enumeration of all 2^n
    assignments. Ties broken by lexicographically smallest assignment
    (False < True, index 0 most significant).
    """
    if f.n > cap:
        raise FormulaError(f"n={f.n} exceeds brute-force cap {cap}")
    pos, neg = _clause_masks(f)
    best_count, best_mask = kernels.maxsat(f.n, pos, neg)
    witness = [bool((best_mask >> (f.n - 1 - j)) & 1) for j in range(f.n)]
    return best_count, witness
