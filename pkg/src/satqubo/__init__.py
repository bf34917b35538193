"""satqubo: 3-SAT / MAX-3-SAT to QUBO translations, classical solvers, and
the coupling-count / solution-quality experiments.
"""

from ._backend import backend_name
from .formula import (
    Clause,
    DimacsError,
    Formula,
    FormulaError,
    Literal,
    clause,
    count_pair,
    count_single,
    critical_clause_count,
    literal_index,
    maxsat_bruteforce,
    normalize_clause,
    parse_dimacs,
    random_3sat,
    satisfied_count,
    write_dimacs,
)
from .qubo import QuboError, QuboMatrix
from .solve import (
    SaParams,
    SolveError,
    SolveResult,
    exhaustive_minima,
    solve_exhaustive,
    solve_sa,
)
from .translate import (
    METHODS,
    ChancellorParams,
    ChoiParams,
    Translation,
    TranslationError,
    decode,
    decode_choi,
    decode_direct,
    decode_nuesslein2nm,
    expected_min_energy,
    translate,
    translate_chancellor,
    translate_choi,
    translate_nuesslein2nm,
    translate_nuessleinnm,
)

__version__ = "0.1.0"
