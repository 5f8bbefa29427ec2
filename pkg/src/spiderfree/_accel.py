"""Numba switch for the bitmask kernels.

Set ``SPIDERFREE_DISABLE_NUMBA=1`` to run every kernel as plain Python (same
code, same results, much slower). Numba is optional; without it the plain path
is used automatically.
"""

import os

try:  # pragma: no cover - import guard
    import numba
except ImportError:  # pragma: no cover
    numba = None

DISABLED = os.environ.get("SPIDERFREE_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")
ENABLED = numba is not None and not DISABLED


def njit(fn):
    if not ENABLED:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)


def python_impl(fn):
    """The uncompiled function behind a kernel (itself if numba is off)."""
    return getattr(fn, "py_func", fn)
