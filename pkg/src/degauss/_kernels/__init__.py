"""Kernel backend selection.

The compiled Cython extension is preferred; the pure numpy backend is a
drop-in fallback.  Set DEGAUSS_PURE_PYTHON=1 to force the fallback (used
by the benchmark to compare both).
"""

import os

if os.environ.get("DEGAUSS_PURE_PYTHON"):
    from . import _pure as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl

BACKEND = _impl.BACKEND
hyp2f1_series = _impl.hyp2f1_series
jacobi_eigenvalues = _impl.jacobi_eigenvalues
