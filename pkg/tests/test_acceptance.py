"""Acceptance gate: one test per release criterion.

Run with `pytest -v` to get one pass/fail line per criterion. Each test is
self-describing and asserts its own runtime budget where one applies.

Criteria covered:
  1. published 2n+m and n+m reference matrices reproduced cell-for-cell
  2. published ancilla-gadget (n+m Ising) reference matrices reproduced
  3. per-clause spectra: exactly two levels; unit gap for the pattern-matrix
     encoding (gap 4(h+g) for the ancilla gadget in its integer units — see
     notes on the parameterization in the repository decision log)
  4. oracle equivalence on 200 random formulas, zero failures
  5. coupling-density ratio n+m-pattern/ancilla-gadget in [0.6, 0.8] with
     linear scaling (R^2 > 0.99) for both series
  6. logical-qubit count laws (3m, n+m, 2n+m, aux sharing)
  7. four-way mean-satisfied comparison table; pattern encoding >= ancilla
     gadget at every size
  8. byte-identical artifacts when criteria 4, 5, 7 re-run with same seeds
"""

import itertools
import json
import time

import pytest

from satqubo.experiment import (
    coupling_linear_r2,
    coupling_ratio_by_n,
    mean_satisfied_table,
    run_comparison,
    run_scaling,
    write_csv,
)
from satqubo.formula import Formula, clause, random_3sat
from satqubo.solve import SaParams
from satqubo.translate import (
    translate_chancellor,
    translate_choi,
    translate_nuesslein2nm,
    translate_nuessleinnm,
)
from satqubo.verify import run_verification

SEED = 2024

SCALING_NS = list(range(20, 201, 20))
SCALING_REPLICATES = 20
COMPARISON_SIZES = [(5, 21), (10, 42), (12, 50)]
COMPARISON_REPLICATES = 20


def _timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


@pytest.fixture(scope="module")
def verification():
    return _timed(run_verification, count=200, n_range=(3, 6),
                  m_range=(1, 8), seed=SEED)


@pytest.fixture(scope="module")
def scaling():
    return _timed(run_scaling, SCALING_NS, replicates=SCALING_REPLICATES,
                  seed=SEED)


@pytest.fixture(scope="module")
def comparison():
    return _timed(run_comparison, COMPARISON_SIZES,
                  replicates=COMPARISON_REPLICATES, sa=SaParams(), seed=SEED)


def _cells(t):
    return {(i, j): w for i, j, w in t.qubo.entries()}


def test_criterion_1_reference_matrices_2nm_and_nm():
    t0 = time.perf_counter()
    # 2n+m reference: (a or b or ~c) and (a or ~b or ~c)
    f1 = Formula(3, (clause(1, 2, -3), clause(1, -2, -3)))
    assert _cells(translate_nuesslein2nm(f1)) == {
        (0, 0): -2, (0, 1): 3, (0, 2): 1, (0, 3): 1, (0, 5): 2,
        (0, 6): -1, (0, 7): -1,
        (2, 2): -1, (2, 3): 3, (2, 5): 1, (2, 6): -1,
        (3, 3): -1, (3, 5): 1, (3, 7): -1,
        (4, 5): 3,
        (5, 5): -2, (5, 6): -1, (5, 7): -1,
        (6, 6): 2, (7, 7): 2,
    }
    # n+m reference: (a or b or c) and (a or ~b or ~c)
    f2 = Formula(3, (clause(1, 2, 3), clause(1, -2, -3)))
    t2 = translate_nuessleinnm(f2)
    assert _cells(t2) == {
        (0, 0): 2, (0, 3): -2, (0, 4): -2,
        (1, 3): -2, (1, 4): 2,
        (2, 3): 1, (2, 4): -1,
        (3, 3): 1,
    }
    assert t2.qubo.coupling_count() == 6
    assert t2.qubo.energy((1, 0, 0, 1, 1)) == -1
    assert time.perf_counter() - t0 < 1.0


def test_criterion_2_reference_matrices_ancilla_gadget():
    # (~a or ~b or ~c) and (a or b or c)
    f1 = Formula(3, (clause(-1, -2, -3), clause(1, 2, 3)))
    assert _cells(translate_chancellor(f1)) == {
        (0, 0): -88, (0, 1): 48, (0, 2): 48, (0, 3): 40, (0, 4): 40,
        (1, 1): -88, (1, 2): 48, (1, 3): 40, (1, 4): 40,
        (2, 2): -88, (2, 3): 40, (2, 4): 40,
        (3, 3): -56, (4, 4): -64,
    }
    # (a or b or c) and (a or ~b or ~c)
    f2 = Formula(3, (clause(1, 2, 3), clause(1, -2, -3)))
    t2 = translate_chancellor(f2)
    assert _cells(t2) == {
        (0, 0): -88, (0, 1): 40, (0, 2): 40, (0, 3): 40, (0, 4): 40,
        (1, 1): -88, (1, 2): 48, (1, 3): 40, (1, 4): 40,
        (2, 2): -88, (2, 3): 40, (2, 4): 40,
        (3, 3): -64, (4, 4): -64,
    }
    assert t2.qubo.coupling_count() == 9


def test_criterion_3_per_clause_spectra():
    t0 = time.perf_counter()
    type_clauses = {
        0: clause(1, 2, 3),
        1: clause(1, 2, -3),
        2: clause(1, -2, -3),
        3: clause(-1, -2, -3),
    }

    def min_over_aux(t, values):
        n = t.meta["n"]
        free = t.k - n
        return min(
            t.qubo.energy(tuple(int(v) for v in values) + aux)
            for aux in itertools.product([0, 1], repeat=free)
        )

    for d, c in type_clauses.items():
        f = Formula(3, (c,))
        for make, gap in ((translate_nuessleinnm, 1),
                          (translate_chancellor, 8)):
            t = make(f)
            levels = {True: set(), False: set()}
            for values in itertools.product([False, True], repeat=3):
                levels[c.satisfied(values)].add(min_over_aux(t, values))
            # exactly two levels; only the falsifying assignment on top
            assert len(levels[True]) == 1, (d, make.__name__)
            assert len(levels[False]) == 1, (d, make.__name__)
            assert levels[False].pop() == levels[True].pop() + gap
    assert time.perf_counter() - t0 < 1.0


def test_criterion_4_oracle_equivalence_200_formulas(verification):
    (checked, failures), elapsed = verification
    assert checked == 200
    assert failures == [], [f"{f.method}: {f.detail}" for f in failures[:3]]
    assert elapsed < 300.0


def test_criterion_5_coupling_ratio_and_linearity(scaling):
    records, elapsed = scaling
    ratios = coupling_ratio_by_n(records)
    assert sorted(ratios) == SCALING_NS
    for n, ratio in ratios.items():
        assert 0.6 <= ratio <= 0.8, (n, ratio)
    assert coupling_linear_r2(records, "nuessleinnm") > 0.99
    assert coupling_linear_r2(records, "chancellor") > 0.99
    assert elapsed < 60.0


def test_criterion_6_qubit_count_laws():
    for i in range(100):
        f = random_3sat(3 + i % 8, 1 + i % 12, seed=SEED + i)
        assert translate_choi(f).k == 3 * f.m
        assert translate_chancellor(f).k == f.n + f.m
        assert translate_nuesslein2nm(f).k == 2 * f.n + f.m
        assert translate_nuessleinnm(f).k <= f.n + f.m
    # aux sharing: (a or b or c) and (a or b or ~c) fold onto 4 qubits
    shared = Formula(3, (clause(1, 2, 3), clause(1, 2, -3)))
    assert translate_nuessleinnm(shared).k == 4


def test_criterion_7_mean_satisfied_comparison(comparison):
    records, _ = comparison
    table = mean_satisfied_table(records)
    lines = table.strip().split("\n")
    assert lines[0] == "method," + ",".join(
        f"V={n}_C={m}" for n, m in COMPARISON_SIZES
    )
    assert len(lines) == 5
    means = {}
    for n, m in COMPARISON_SIZES:
        for method in ("nuessleinnm", "chancellor"):
            vals = [r.satisfied for r in records
                    if r.method == method and (r.n, r.m) == (n, m)]
            means[(method, n)] = sum(vals) / len(vals)
        assert means[("nuessleinnm", n)] >= means[("chancellor", n)], (n, m)


def test_criterion_8_determinism(verification, scaling, comparison):
    (checked, failures), _ = verification
    again_checked, again_failures = run_verification(
        count=200, n_range=(3, 6), m_range=(1, 8), seed=SEED
    )
    doc = json.dumps([checked, [vars(f) for f in failures]])
    doc2 = json.dumps([again_checked, [vars(f) for f in again_failures]])
    assert doc == doc2

    scaling_csv = write_csv(scaling[0])
    scaling_csv2 = write_csv(
        run_scaling(SCALING_NS, replicates=SCALING_REPLICATES, seed=SEED)
    )
    assert scaling_csv.encode() == scaling_csv2.encode()

    comparison_csv = write_csv(comparison[0])
    comparison_csv2 = write_csv(
        run_comparison(COMPARISON_SIZES, replicates=COMPARISON_REPLICATES,
                       sa=SaParams(), seed=SEED)
    )
    assert comparison_csv.encode() == comparison_csv2.encode()
