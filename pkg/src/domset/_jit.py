"""numba switch.

Set ``DOMSET_DISABLE_JIT=1`` to force the pure numpy/Python kernels even
when numba is importable.
"""
import os

_disabled = os.environ.get("DOMSET_DISABLE_JIT", "").strip().lower() in ("1", "true", "yes", "on")

try:
    if _disabled:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrapper(func):
            return func

        return wrapper


USE_NUMBA = HAVE_NUMBA
