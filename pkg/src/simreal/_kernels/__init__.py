"""Hot per-pixel kernels with a compiled core and a numpy fallback.

The compiled extension is preferred when it imports cleanly; otherwise the
numpy reference implementation is used. Both produce bit-identical output,
so which backend is active never changes results, only speed. Set
SIMREAL_PURE_PYTHON=1 to force the fallback (used by the benchmark and the
equivalence tests).
"""

from __future__ import annotations

import os

from simreal._kernels import reference

if os.environ.get("SIMREAL_PURE_PYTHON"):
    _impl = reference
    BACKEND = "python"
else:
    try:
        from simreal._kernels import _native as _impl  # type: ignore[no-redef]

        BACKEND = "native"
    except ImportError:
        _impl = reference
        BACKEND = "python"

sobel_magnitude = _impl.sobel_magnitude
hysteresis_mask = _impl.hysteresis_mask
value_noise = _impl.value_noise

__all__ = ["BACKEND", "sobel_magnitude", "hysteresis_mask", "value_noise", "reference"]
