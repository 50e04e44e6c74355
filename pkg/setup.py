"""Builds the optional compiled kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import); the extension only accelerates the
monomial/staircase kernels.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("rrclosure._kernels.fast", ["src/rrclosure/_kernels/fast.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
