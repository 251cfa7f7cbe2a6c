"""Kernel backend selection.

The compiled Cython extension is used when it imports; otherwise the NumPy
implementation is used.  ``WPS_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels

DEFAULT_ENUM_LIMIT = 2**24

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

if _ckernels is not None and os.environ.get("WPS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    impl = _ckernels
    BACKEND = "cython"
else:
    impl = _pykernels
    BACKEND = "numpy"


def backends() -> dict:
    out = {"numpy": _pykernels}
    if _ckernels is not None:
        out["cython"] = _ckernels
    return out


def enumeration_limit() -> int:
    """Bound on ``q**(n+1)`` for brute-force enumeration (env ``WPS_ENUM_LIMIT``)."""
    raw = os.environ.get("WPS_ENUM_LIMIT")
    return int(raw) if raw else DEFAULT_ENUM_LIMIT
