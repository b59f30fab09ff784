"""Search-kernel selection: compiled extension when available, else pure Python.

The compiled kernel (``trimat._search_c``, built from Cython) and the pure
fallback (``trimat._search_py``) implement the same contract and must return
identical results.  Selection happens once at import; setting the
environment variable ``TRIMAT_PURE=1`` forces the pure kernel, which is
mainly useful for benchmarking and for exercising both paths in tests.
"""

from __future__ import annotations

import os

from . import _search_py

try:
    from . import _search_c  # type: ignore[attr-defined]
except ImportError:
    _search_c = None  # type: ignore[assignment]

if _search_c is not None and os.environ.get("TRIMAT_PURE", "") != "1":
    _impl = _search_c
    BACKEND = "compiled"
else:
    _impl = _search_py
    BACKEND = "python"

#: Kernels available in this installation, for tests and benchmarks.
AVAILABLE = {"python": _search_py}
if _search_c is not None:
    AVAILABLE["compiled"] = _search_c


def search_bijections(m1, m2, allowed, limit=None):
    """All (or the first ``limit``) index bijections g with
    m2[g[i]][g[j]] == m1[i][j], in lexicographic order of the image tuple."""
    return _impl.search_bijections(m1, m2, allowed, limit)
