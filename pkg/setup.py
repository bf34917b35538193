"""Build the optional compiled kernel extension.

The package works without it (a pure-Python fallback is selected at import),
but the solvers are orders of magnitude faster with the extension built.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("satqubo._kernels", ["src/satqubo/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
