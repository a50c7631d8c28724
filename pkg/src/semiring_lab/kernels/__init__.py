"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
module is the fallback.  SEMIRING_LAB_KERNELS=pure|compiled forces a
backend (the benchmark and the cross-backend tests use this).
"""

import os

_choice = os.environ.get("SEMIRING_LAB_KERNELS", "auto").strip().lower()

if _choice in ("", "auto"):
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl
elif _choice in ("compiled", "c", "speedups"):
    from . import _speedups as _impl  # type: ignore[attr-defined]
elif _choice in ("pure", "py", "python"):
    from . import _pure as _impl
else:
    raise RuntimeError(f"unknown SEMIRING_LAB_KERNELS value {_choice!r}")

BACKEND = _impl.BACKEND
closure_labels = _impl.closure_labels
search_maps = _impl.search_maps
comm_monoid_tables = _impl.comm_monoid_tables

__all__ = ["BACKEND", "closure_labels", "search_maps", "comm_monoid_tables"]
