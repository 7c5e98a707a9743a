"""Backend selection for the bit-packed GF(2) kernels.

Set ``GF2CYCLES_BACKEND=numpy`` to force the pure-numpy path even when numba
is installed. Any other value (or no value) uses numba when it imports.
"""

from __future__ import annotations

import os

_requested = os.environ.get("GF2CYCLES_BACKEND", "numba").strip().lower()

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on the environment
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _requested != "numpy"
BACKEND = "numba" if USE_NUMBA else "numpy"
