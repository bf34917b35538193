"""Oracle-equivalence verification: for random small formulas, the exhaustive
QUBO minimum of every translation must equal the energy implied by the exact
MAX-3-SAT optimum, and decoding every minimizing bit-vector must recover an
optimal assignment.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .formula import maxsat_bruteforce, random_3sat, satisfied_count, write_dimacs
from .rng import mix
from .solve import exhaustive_minima
from .translate import METHODS, decode, expected_min_energy, translate


@dataclass(frozen=True)
class VerifyFailure:
    method: str
    detail: str
    dimacs: str


def run_verification(
    count: int = 50,
    n_range: tuple[int, int] = (3, 6),
    m_range: tuple[int, int] = (1, 8),
    methods=METHODS,
    seed: int = 0,
    translators: dict | None = None,
) -> tuple[int, list[VerifyFailure]]:
    """Check `count` random strict formulas; returns (checked, failures).

    `translators` may override the translator per method (used by the test
    harness to confirm the checks catch corrupted translations).
    """
    rng = random.Random(mix(seed, 7))
    failures = []
    for i in range(count):
        n = rng.randint(*n_range)
        m = rng.randint(*m_range)
        f = random_3sat(n, m, mix(seed, 4, i))
        opt, _ = maxsat_bruteforce(f)
        for method in methods:
            make = (translators or {}).get(method) or (lambda f, meth=method: translate(f, meth))
            t = make(f)
            expected = expected_min_energy(method, f, opt)
            minima = exhaustive_minima(t.qubo)
            actual = t.qubo.energy(minima[0])
            if actual != expected:
                failures.append(
                    VerifyFailure(
                        method,
                        f"min energy {actual} != expected {expected} (opt={opt})",
                        write_dimacs(f),
                    )
                )
                continue
            for x in minima:
                got = satisfied_count(f, decode(t, x))
                if got != opt:
                    failures.append(
                        VerifyFailure(
                            method,
                            f"argmin decodes to {got} satisfied clauses, optimum is {opt}",
                            write_dimacs(f),
                        )
                    )
                    break
    return count, failures
