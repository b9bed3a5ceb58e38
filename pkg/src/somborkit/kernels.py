"""Select the compiled scan kernels, falling back to pure Python.

Set ``SOMBORKIT_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("SOMBORKIT_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

KIND_BRIDGES = _kernels_py.KIND_BRIDGES
KIND_KAPPA = _kernels_py.KIND_KAPPA
KIND_LAMBDA = _kernels_py.KIND_LAMBDA
MAX_SCAN_ORDER = _kernels_py.MAX_SCAN_ORDER

IMPLEMENTATION: str = _impl.IMPLEMENTATION
scan_range = _impl.scan_range
connected_masks = _impl.connected_masks
mask_sombor = _impl.mask_sombor
mask_class = _impl.mask_class

__all__ = [
    "IMPLEMENTATION",
    "KIND_BRIDGES",
    "KIND_KAPPA",
    "KIND_LAMBDA",
    "MAX_SCAN_ORDER",
    "connected_masks",
    "mask_class",
    "mask_sombor",
    "scan_range",
]
