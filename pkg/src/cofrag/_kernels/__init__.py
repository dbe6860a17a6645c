"""Hot loops behind a backend switch.

The numba backend is used when numba imports cleanly. Setting the
environment variable ``COFRAG_NO_NUMBA=1`` forces the pure-numpy path.
"""

import os

from . import numpy_impl

BACKEND = "numpy"
_impl = numpy_impl

if os.environ.get("COFRAG_NO_NUMBA", "").strip() not in ("1", "true", "yes"):
    try:
        from . import numba_impl
    except ImportError:  # pragma: no cover - numba is optional
        numba_impl = None
    else:
        _impl = numba_impl
        BACKEND = "numba"

gcd_outer = _impl.gcd_outer
lcm_outer = _impl.lcm_outer
divisor_mask = _impl.divisor_mask
multiple_mask = _impl.multiple_mask
hom_map = _impl.hom_map
saturate = _impl.saturate

__all__ = [
    "BACKEND",
    "gcd_outer",
    "lcm_outer",
    "divisor_mask",
    "multiple_mask",
    "hom_map",
    "saturate",
]
