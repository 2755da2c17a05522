"""Backend selection for the hot kernels.

The compiled extension ``gagmax._ckernels`` is used when importable; set
``GAGMAX_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

from __future__ import annotations

import os

from gagmax import _pykernels

if os.environ.get("GAGMAX_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from gagmax import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "compiled" if _impl is not _pykernels else "python"
MAX_CANON_N = _impl.MAX_CANON_N

bfs_all_pairs = _impl.bfs_all_pairs
canonical_labeling = _impl.canonical_labeling


def available_backends() -> dict[str, object]:
    """Every importable backend module, keyed by name (for tests and benchmarks)."""
    out: dict[str, object] = {"python": _pykernels}
    try:
        from gagmax import _ckernels
    except ImportError:
        pass
    else:
        out["compiled"] = _ckernels
    return out
