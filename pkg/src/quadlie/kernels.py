"""Backend selection for the exact integer kernels.

Prefers the compiled extension, falls back to the pure-Python twin.
QUADLIE_BACKEND=pure|compiled forces a backend (compiled raises if the
extension is missing); the active choice is exported as BACKEND so reports
and benchmarks can record it.
"""

from __future__ import annotations

import os

_choice = os.environ.get("QUADLIE_BACKEND", "auto")

if _choice not in ("auto", "compiled", "pure"):
    raise RuntimeError(f"QUADLIE_BACKEND must be auto|compiled|pure, got {_choice!r}")

if _choice == "pure":
    from . import _kernels_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise
        from . import _kernels_py as _impl

        BACKEND = "pure"

rref_int = _impl.rref_int
det_int = _impl.det_int
