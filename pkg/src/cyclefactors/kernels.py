"""Backend selection for the hot kernels.

The compiled ``_core`` extension is used when importable; setting
``CYCLEFACTORS_PURE_PYTHON=1`` forces the ``_pycore`` fallback.
"""

import os

from . import _pycore

ANY, ALL_ODD, ALL_EVEN, EXISTS_ODD, EXISTS_EVEN = range(5)
FIRST, ALL, SIGNATURES = range(3)


def _load_compiled():
    try:
        from . import _core
    except ImportError:
        return None
    return _core


_compiled = _load_compiled()

if _compiled is not None and not os.environ.get("CYCLEFACTORS_PURE_PYTHON"):
    _active = _compiled
    BACKEND = "cython"
else:
    _active = _pycore
    BACKEND = "python"

factor_search = _active.factor_search
blossom_matching = _active.blossom_matching


def available_backends():
    """Map of backend name to kernel module, for cross-checks and benchmarks."""
    found = {"python": _pycore}
    if _compiled is not None:
        found["cython"] = _compiled
    return found
