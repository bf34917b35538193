"""The four 3-SAT-to-QUBO translations and their decoders.

All four encode MAX-3-SAT: the QUBO ground states correspond to assignments
satisfying the maximum number of clauses. Size laws (logical qubits):

  choi          3m     one qubit per literal slot
  chancellor    n+m    one qubit per variable + one ancilla per clause
  nuesslein2nm  2n+m   two qubits per variable + one per clause
  nuessleinnm   n+m    one qubit per variable + one aux per clause, with
                       optional sharing of auxes across clauses that encode
                       the same sub-formula
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from itertools import combinations

from .formula import Clause, Formula, Literal, literal_index, normalize_clause
from .qubo import QuboMatrix

METHODS = ("choi", "chancellor", "nuesslein2nm", "nuessleinnm")


class TranslationError(ValueError):
    pass


@dataclass(frozen=True)
class ChoiParams:
    """Incentive/penalty weights; valid whenever Y > 2|X| and Z > 2|X|."""

    X: int = 1
    Y: int = 3
    Z: int = 3

    def __post_init__(self):
        if self.X <= 0 or self.Y <= 0 or self.Z <= 0:
            raise TranslationError("Choi penalties must be positive")
        if not (self.Y > 2 * abs(self.X) and self.Z > 2 * abs(self.X)):
            raise TranslationError("Choi params need Y > 2|X| and Z > 2|X|")


@dataclass(frozen=True)
class ChancellorParams:
    """Ising weights of the clause gadget, special-case relations
    h_a = 2h and J_a = 2J with h = g. The per-clause energy gap between the
    satisfied level and the single unsatisfying assignment is 4(h+g) = 8g
    in these integer units.
    """

    h: int = 1
    g: int = 1
    h_a: int = 2
    J: int = 5
    J_a: int = 10

    def __post_init__(self):
        if self.h != self.g:
            raise TranslationError("this construction requires h = g")
        if self.h_a != 2 * self.h:
            raise TranslationError("Chancellor special case requires h_a = 2h")
        if self.J_a != 2 * self.J:
            raise TranslationError("Chancellor special case requires J_a = 2J")
        if not (self.J > self.g > 0):
            raise TranslationError("Chancellor params need J > g > 0")


@dataclass
class Translation:
    """A QUBO matrix plus the decoding recipe binding its qubits back to the
    formula (roles per qubit index, and method-specific metadata)."""

    method: str
    qubo: QuboMatrix
    roles: tuple[str, ...]
    meta: dict

    def __post_init__(self):
        if self.method not in METHODS:
            raise TranslationError(f"unknown method {self.method!r}")
        if len(self.roles) != self.qubo.k:
            raise TranslationError("roles must cover every qubit index exactly once")

    @property
    def k(self) -> int:
        return self.qubo.k

    def to_dict(self) -> dict:
        d = self.qubo.to_dict()
        d["roles"] = list(self.roles)
        d["meta"] = dict(self.meta, method=self.method)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, doc: dict) -> "Translation":
        qubo = QuboMatrix.from_dict(doc)
        meta = dict(doc.get("meta", {}))
        method = meta.pop("method", None)
        return cls(method, qubo, tuple(doc.get("roles", ())), meta)

    @classmethod
    def from_json(cls, text: str) -> "Translation":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# Choi (3m qubits): one qubit per literal slot; reduction via maximum
# independent set on the conflict graph.


def translate_choi(f: Formula, params: ChoiParams | None = None) -> Translation:
    params = params or ChoiParams()
    f.require_strict()
    m = f.m
    q = QuboMatrix(3 * m)
    roles = []
    slots: list[int] = []
    positive: dict[int, list[int]] = {}
    negative: dict[int, list[int]] = {}
    for k, c in enumerate(f.clauses):
        base = 3 * k
        for i, lit in enumerate(c):
            slot = base + i
            q.add(slot, slot, -params.X)
            roles.append(f"lit:{k},{i}")
            slots.append(lit.to_dimacs())
            (negative if lit.negated else positive).setdefault(lit.var, []).append(slot)
        for s1, s2 in combinations(range(base, base + 3), 2):
            q.add(s1, s2, params.Y)
    for var, pos_slots in positive.items():
        for s1 in pos_slots:
            for s2 in negative.get(var, ()):
                q.add(min(s1, s2), max(s1, s2), params.Z)
    meta = {
        "n": f.n,
        "m": m,
        "params": asdict(params),
        "slots": slots,
    }
    return Translation("choi", q, tuple(roles), meta)


def decode_choi(t: Translation, x) -> list[bool]:
    """Set-slot rules of the literal encoding; conflicting slots resolved by
    the first set slot in index order; untouched variables default to False."""
    if t.method != "choi":
        raise TranslationError(f"decode_choi on method {t.method!r}")
    if len(x) != t.k:
        raise TranslationError(f"bit-vector length {len(x)} != k={t.k}")
    assigned: dict[int, bool] = {}
    for slot, sid in enumerate(t.meta["slots"]):
        if x[slot]:
            var = abs(sid) - 1
            if var not in assigned:
                assigned[var] = sid > 0
    return [assigned.get(j, False) for j in range(t.meta["n"])]


# ---------------------------------------------------------------------------
# Chancellor (n+m qubits): per-clause Ising gadget with an ancilla realizing
# the triple interaction, converted to QUBO via sigma = 2x - 1 (additive
# constants dropped but tracked so the satisfied energy level is known).
#
# Coefficient tables are per normalized clause type d = number of negated
# literals, slots ordered positives-first. Linear fields in units of h,
# pair couplings J + (sign)*g for slot pairs (01, 02, 12), ancilla field in
# units of h_a. Every variable couples to the clause ancilla with J_a.

_CH_LIN = {0: (-2, -2, -2), 1: (0, 0, 2), 2: (-2, 0, 0), 3: (2, 2, 2)}
_CH_PAIR = {0: (1, 1, 1), 1: (1, -1, -1), 2: (-1, -1, 1), 3: (1, 1, 1)}
_CH_ANC = {0: -1, 1: 1, 2: -1, 3: 1}
_SLOT_PAIRS = ((0, 1), (0, 2), (1, 2))


def _chancellor_clause_terms(nc: Clause, params: ChancellorParams):
    d = nc.negation_count()
    lin = tuple(c * params.h for c in _CH_LIN[d])
    pair = tuple(params.J + s * params.g for s in _CH_PAIR[d])
    h_anc = _CH_ANC[d] * params.h_a
    return lin, pair, h_anc


def _chancellor_offset(nc: Clause, params: ChancellorParams) -> int:
    """QUBO energy of the satisfied level contributed by one clause."""
    lin, pair, h_anc = _chancellor_clause_terms(nc, params)
    sat_ising = -3 * params.J - params.g
    conversion_const = sum(pair) + 3 * params.J_a - (sum(lin) + h_anc)
    return sat_ising - conversion_const


def translate_chancellor(
    f: Formula, params: ChancellorParams | None = None
) -> Translation:
    params = params or ChancellorParams()
    f.require_strict()
    n, m = f.n, f.m
    q = QuboMatrix(n + m)
    e0 = 0
    for k, c in enumerate(f.clauses):
        nc = normalize_clause(c)
        lin, pair, h_anc = _chancellor_clause_terms(nc, params)
        vs = [lit.var for lit in nc]
        anc = n + k
        for (s, t), J_st in zip(_SLOT_PAIRS, pair):
            i, j = sorted((vs[s], vs[t]))
            q.add(i, j, 4 * J_st)
        for s in range(3):
            j_sum = sum(
                J_st for (a, b), J_st in zip(_SLOT_PAIRS, pair) if s in (a, b)
            )
            q.add(vs[s], vs[s], 2 * lin[s] - 2 * (j_sum + params.J_a))
            q.add(vs[s], anc, 4 * params.J_a)
        q.add(anc, anc, 2 * h_anc - 6 * params.J_a)
        e0 += _chancellor_offset(nc, params)
    roles = tuple(f"var:{j}" for j in range(n)) + tuple(
        f"aux:clause:{k}" for k in range(m)
    )
    meta = {
        "n": n,
        "m": m,
        "params": asdict(params),
        "e0": e0,
        "gap": 4 * (params.h + params.g),
    }
    return Translation("chancellor", q, roles, meta)


# ---------------------------------------------------------------------------
# Nuesslein 2n+m: two qubits per variable (one per polarity) plus one per
# clause; cell values from literal occurrence counts.


def translate_nuesslein2nm(f: Formula) -> Translation:
    f.require_strict()
    n, m = f.n, f.m
    q = QuboMatrix(2 * n + m)
    single = [0] * (2 * n)
    pair_counts: dict[tuple[int, int], int] = {}
    for c in f.clauses:
        idxs = [literal_index(lit) for lit in c]
        for i in idxs:
            single[i] += 1
        for i, j in combinations(sorted(idxs), 2):
            pair_counts[(i, j)] = pair_counts.get((i, j), 0) + 1
    for i in range(2 * n):
        q.add(i, i, -single[i])
    for k in range(m):
        q.add(2 * n + k, 2 * n + k, 2)
    for i in range(0, 2 * n, 2):
        q.add(i, i + 1, m + 1)
    for (i, j), r in pair_counts.items():
        if j - i == 1 and i % 2 == 0:
            continue  # complementary-pair penalty takes precedence
        q.add(i, j, r)
    for k, c in enumerate(f.clauses):
        for lit in c:
            q.add(literal_index(lit), 2 * n + k, -1)
    roles = tuple(f"slot:{i}" for i in range(2 * n)) + tuple(
        f"aux:clause:{k}" for k in range(m)
    )
    return Translation("nuesslein2nm", q, roles, {"n": n, "m": m})


def decode_nuesslein2nm(t: Translation, x) -> list[bool]:
    """v_j is True iff the positive-polarity qubit x_{2j} is set."""
    if t.method != "nuesslein2nm":
        raise TranslationError(f"decode_nuesslein2nm on method {t.method!r}")
    if len(x) != t.k:
        raise TranslationError(f"bit-vector length {len(x)} != k={t.k}")
    return [bool(x[2 * j]) for j in range(t.meta["n"])]


# ---------------------------------------------------------------------------
# Nuesslein n+m: per-clause-type pattern matrices stacked onto (variables +
# aux qubits); identical sub-formulas may share one aux qubit.
#
# Pattern cells are keyed by slot pairs; slots 0..2 are the normalized
# clause's literals (positives first, stable), slot 3 the aux qubit.

_NM_PATTERNS = {
    0: {(0, 1): 2, (0, 3): -2, (1, 3): -2, (2, 2): -1, (2, 3): 1, (3, 3): 1},
    1: {(0, 1): 2, (0, 3): -2, (1, 3): -2, (2, 2): 1, (2, 3): -1, (3, 3): 2},
    2: {(0, 0): 2, (0, 1): -2, (0, 3): -2, (1, 3): 2, (2, 2): 1, (2, 3): -1},
    3: {
        (0, 0): -1, (0, 1): 1, (0, 2): 1, (0, 3): 1,
        (1, 1): -1, (1, 2): 1, (1, 3): 1,
        (2, 2): -1, (2, 3): 1,
        (3, 3): -1,
    },
}
NM_H_STAR = {0: -1, 1: 0, 2: 0, 3: -1}


def _aux_key(nc: Clause, d: int, k: int, share_aux: bool):
    if not share_aux:
        return ("clause", k)
    vs = [lit.var for lit in nc]
    if d <= 1:
        return ("or", min(vs[0], vs[1]), max(vs[0], vs[1]))
    if d == 2:
        return ("orn", vs[0], vs[1])
    return ("conj", tuple(sorted(vs)))


def _aux_role(key) -> str:
    kind = key[0]
    if kind == "clause":
        return f"aux:clause:{key[1]}"
    if kind == "or":
        return f"aux:pair:{key[1] + 1},{key[2] + 1}"
    if kind == "orn":
        return f"aux:pair:{key[1] + 1},-{key[2] + 1}"
    return "aux:conj:" + ",".join(str(-(v + 1)) for v in key[1])


def translate_nuessleinnm(f: Formula, share_aux: bool = True) -> Translation:
    f.require_strict()
    n, m = f.n, f.m
    normalized = [normalize_clause(c) for c in f.clauses]
    degrees = [nc.negation_count() for nc in normalized]
    aux_index: dict[tuple, int] = {}
    for k, (nc, d) in enumerate(zip(normalized, degrees)):
        key = _aux_key(nc, d, k, share_aux)
        if key not in aux_index:
            aux_index[key] = n + len(aux_index)
    q = QuboMatrix(n + len(aux_index))
    for k, (nc, d) in enumerate(zip(normalized, degrees)):
        slots = [lit.var for lit in nc] + [aux_index[_aux_key(nc, d, k, share_aux)]]
        for (s, t), w in _NM_PATTERNS[d].items():
            i, j = sorted((slots[s], slots[t]))
            q.add(i, j, w)
    roles = tuple(f"var:{j}" for j in range(n)) + tuple(
        _aux_role(key) for key in aux_index
    )
    meta = {
        "n": n,
        "m": m,
        "share_aux": share_aux,
        "p": sum(1 for d in degrees if d == 0),
        "q": sum(1 for d in degrees if d == 3),
    }
    return Translation("nuessleinnm", q, roles, meta)


def decode_direct(t: Translation, x) -> list[bool]:
    """v_j is True iff x_j is set; ancilla/aux bits are ignored. Applies to
    the methods whose first n qubits are the variables."""
    if t.method not in ("chancellor", "nuessleinnm"):
        raise TranslationError(f"decode_direct on method {t.method!r}")
    if len(x) != t.k:
        raise TranslationError(f"bit-vector length {len(x)} != k={t.k}")
    return [bool(x[j]) for j in range(t.meta["n"])]


# ---------------------------------------------------------------------------


def translate(f: Formula, method: str, **kwargs) -> Translation:
    if method == "choi":
        return translate_choi(f, kwargs.get("choi_params"))
    if method == "chancellor":
        return translate_chancellor(f, kwargs.get("chancellor_params"))
    if method == "nuesslein2nm":
        return translate_nuesslein2nm(f)
    if method == "nuessleinnm":
        return translate_nuessleinnm(f, kwargs.get("share_aux", True))
    raise TranslationError(f"unknown method {method!r}")


def decode(t: Translation, x) -> list[bool]:
    if t.method == "choi":
        return decode_choi(t, x)
    if t.method == "nuesslein2nm":
        return decode_nuesslein2nm(t, x)
    return decode_direct(t, x)


def expected_min_energy(
    method: str,
    f: Formula,
    opt: int,
    choi_params: ChoiParams | None = None,
    chancellor_params: ChancellorParams | None = None,
):
    """QUBO minimum energy implied by the MAX-3-SAT optimum `opt` of f."""
    if method == "nuesslein2nm":
        return -opt
    if method == "nuessleinnm":
        degrees = [normalize_clause(c).negation_count() for c in f.clauses]
        p = sum(1 for d in degrees if d == 0)
        q = sum(1 for d in degrees if d == 3)
        return -(p + q) + (f.m - opt)
    if method == "choi":
        return -(choi_params or ChoiParams()).X * opt
    if method == "chancellor":
        params = chancellor_params or ChancellorParams()
        e0 = sum(_chancellor_offset(normalize_clause(c), params) for c in f.clauses)
        return e0 + 4 * (params.h + params.g) * (f.m - opt)
    raise TranslationError(f"unknown method {method!r}")
