"""Hot kernels: compiled Cython core with a pure-Python fallback.

The compiled module is used when it was built and ``SKEWCODES_PURE_PYTHON``
is unset; ``BACKEND`` names the active implementation.
"""

import os

from . import _pykernels as pure

compiled = None
if not os.environ.get("SKEWCODES_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled
    except ImportError:  # extension not built
        compiled = None

_impl = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

make_tables = _impl.make_tables
petit_mul = _impl.petit_mul
left_powers = _impl.left_powers
rank = _impl.rank
scan_homs = _impl.scan_homs
scan_weight = _impl.scan_weight
weight_distribution = _impl.weight_distribution

__all__ = [
    "BACKEND",
    "compiled",
    "pure",
    "make_tables",
    "petit_mul",
    "left_powers",
    "rank",
    "scan_homs",
    "scan_weight",
    "weight_distribution",
]
