"""Kernel selection: compiled extension when available, numpy otherwise.

Set SCREWSR_FORCE_FALLBACK=1 to skip the compiled extension.
"""

import os

from . import fallback

if os.environ.get("SCREWSR_FORCE_FALLBACK") == "1":
    _impl = fallback
    IMPLEMENTATION = "fallback"
else:
    try:
        from . import _native as _impl

        IMPLEMENTATION = "native"
    except ImportError:
        _impl = fallback
        IMPLEMENTATION = "fallback"

expm = _impl.expm
geodesic_scan = _impl.geodesic_scan

__all__ = ["expm", "geodesic_scan", "IMPLEMENTATION", "fallback"]
