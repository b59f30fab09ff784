"""Build script for the optional compiled search kernel.

The package is pure Python except for ``trimat._search_c``, a small Cython
module that accelerates the backtracking search for matrix-preserving
bijections.  The extension is marked optional: if no compiler (or Cython)
is available the install still succeeds and the package falls back to the
pure-Python kernel at import time.
"""

from setuptools import Extension, setup

PYX = "src/trimat/_search_c.pyx"

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("trimat._search_c", [PYX])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

for ext in extensions:
    ext.optional = True

setup(ext_modules=extensions)
