"""Optional numba acceleration.

Set ``CIRCLEWEIGHTS_DISABLE_JIT=1`` to force the pure-numpy code paths
(useful for debugging, or where numba is not installed).
"""

import os

JIT_DISABLED = os.environ.get("CIRCLEWEIGHTS_DISABLE_JIT", "").strip().lower() in (
    "1",
    "true",
    "yes",
)

try:
    if JIT_DISABLED:
        raise ImportError
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:
    NUMBA_AVAILABLE = False

    def njit(func=None, **kwargs):
        if func is not None:
            return func

        def wrapper(f):
            return f

        return wrapper


__all__ = ["JIT_DISABLED", "NUMBA_AVAILABLE", "njit"]
