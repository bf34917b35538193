"""Kernel backend selection: compiled Cython extension if available,
pure-Python fallback otherwise. Both implement the same algorithms with the
same RNG and tie-breaking, so results are identical bit-for-bit.
"""

try:
    from . import _kernels as kernels

    BACKEND = "compiled"
except ImportError:  # extension not built
    from . import _kernels_py as kernels

    BACKEND = "pure"


def backend_name() -> str:
    return BACKEND
