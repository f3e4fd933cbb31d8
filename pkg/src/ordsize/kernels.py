"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
fallback is always available and implements identical contracts.  Set
ORDSIZE_PURE=1 to force the fallback (useful for benchmarking and for
differential testing of the two backends).
"""

import os

from . import _kernels_py

if os.environ.get("ORDSIZE_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _fastcore as _impl
    except ImportError:
        _impl = _kernels_py

backend_name = _impl.backend_name
find_violation4 = _impl.find_violation4
max_clique_bits = _impl.max_clique_bits
max_coclique_bits = _impl.max_coclique_bits
canon_key = _impl.canon_key
extend_level = _impl.extend_level


def available_backends():
    """Name -> module for every importable backend."""
    out = {"python": _kernels_py}
    try:
        from . import _fastcore

        out["cython"] = _fastcore
    except ImportError:
        pass
    return out
