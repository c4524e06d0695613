"""JIT switch for the word kernels.

Set ``RACGMIN_NUMBA=0`` before import to run every kernel as plain Python
over numpy arrays. Anything else (or unset) compiles them with numba.
"""

import os

_flag = os.environ.get("RACGMIN_NUMBA", "1").strip().lower()
USE_NUMBA = _flag not in ("0", "false", "no", "off")

if USE_NUMBA:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False

if USE_NUMBA:

    def njit(func):
        return _njit(cache=True, nogil=True)(func)

else:

    def njit(func):
        return func


BACKEND = "numba" if USE_NUMBA else "python"
