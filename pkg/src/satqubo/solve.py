"""Classical QUBO solvers: exact exhaustive search (verification oracle) and
simulated annealing (the desk-scale stand-in for a quantum annealer).

Both solvers run on the selected kernel backend (compiled extension or pure
Python); results are identical across backends for the same inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from ._backend import backend_name, kernels
from .qubo import QuboMatrix

EXHAUSTIVE_CAP = 24


class SolveError(ValueError):
    pass


@dataclass(frozen=True)
class SaParams:
    sweeps: int = 1000
    restarts: int = 20
    t_initial: float = 10.0
    t_final: float = 0.1
    seed: int = 0

    def __post_init__(self):
        if self.sweeps < 1:
            raise SolveError("sweeps must be >= 1")
        if self.restarts < 1:
            raise SolveError("restarts must be >= 1")
        if not self.t_initial >= self.t_final > 0:
            raise SolveError("need t_initial >= t_final > 0")


@dataclass(frozen=True)
class SolveResult:
    best: tuple[int, ...]
    best_energy: int | float
    evaluations: int
    restarts_used: int

    def to_dict(self) -> dict:
        return {
            "best_bits": "".join(str(b) for b in self.best),
            "energy": self.best_energy,
            "evaluations": self.evaluations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _flatten(q: QuboMatrix):
    """Diagonal array plus symmetric CSR adjacency (neighbors sorted)."""
    k = q.k
    diag = np.zeros(k, dtype=np.float64)
    nbrs: list[list[tuple[int, float]]] = [[] for _ in range(k)]
    for i, j, w in q.entries():
        if i == j:
            diag[i] = w
        else:
            nbrs[i].append((j, w))
            nbrs[j].append((i, w))
    off = np.zeros(k + 1, dtype=np.int64)
    idx_flat: list[int] = []
    w_flat: list[float] = []
    for i in range(k):
        nbrs[i].sort()
        off[i + 1] = off[i] + len(nbrs[i])
        for j, w in nbrs[i]:
            idx_flat.append(j)
            w_flat.append(w)
    idx = np.asarray(idx_flat, dtype=np.int64)
    w_arr = np.asarray(w_flat, dtype=np.float64)
    return diag, off, idx, w_arr


def _mask_to_bits(mask: int, k: int) -> tuple[int, ...]:
    return tuple((mask >> (k - 1 - i)) & 1 for i in range(k))


def solve_exhaustive(q: QuboMatrix, cap: int = EXHAUSTIVE_CAP) -> SolveResult:
    """Global minimum over all 2^k bit-vectors; ties broken by the
    lexicographically smallest vector."""
    if q.k > cap:
        raise SolveError(f"k={q.k} exceeds exhaustive cap {cap}")
    diag, off, idx, w = _flatten(q)
    best_mask, _, _ = kernels.exhaustive(q.k, diag, off, idx, w, False)
    best = _mask_to_bits(int(best_mask), q.k)
    return SolveResult(best, q.energy(best), 2**q.k, 0)


def exhaustive_minima(q: QuboMatrix, cap: int = EXHAUSTIVE_CAP) -> list[tuple[int, ...]]:
    """All bit-vectors attaining the global minimum, in lexicographic order."""
    if q.k > cap:
        raise SolveError(f"k={q.k} exceeds exhaustive cap {cap}")
    diag, off, idx, w = _flatten(q)
    _, _, minima = kernels.exhaustive(q.k, diag, off, idx, w, True)
    return [_mask_to_bits(int(m), q.k) for m in sorted(minima)]


def solve_sa(q: QuboMatrix, params: SaParams | None = None) -> SolveResult:
    """Best-of-restarts single-flip Metropolis annealing under a geometric
    temperature schedule. Deterministic for fixed (q, params); the reported
    energy never exceeds that of the all-zero vector."""
    params = params or SaParams()
    if q.k < 1:
        raise SolveError("simulated annealing needs k >= 1")
    diag, off, idx, w = _flatten(q)
    if params.sweeps > 1:
        ratio = (params.t_final / params.t_initial) ** (1.0 / (params.sweeps - 1))
    else:
        ratio = 1.0
    bits, _ = kernels.sa_run(
        q.k, diag, off, idx, w,
        params.sweeps, params.restarts,
        float(params.t_initial), ratio,
        params.seed & ((1 << 64) - 1),
    )
    best = tuple(bits)
    return SolveResult(
        best, q.energy(best), params.restarts * params.sweeps * q.k, params.restarts
    )


def solver_backend() -> str:
    """'compiled' when the Cython extension is active, else 'pure'."""
    return backend_name()
