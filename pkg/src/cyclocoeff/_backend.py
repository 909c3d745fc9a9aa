"""Pick the kernel implementation once, at import.

Set ``CYCLO_BACKEND=python`` to force the reference kernels even when the
compiled extension is present.
"""
import os

from . import _pykernels

BACKEND = "python"
kernels = _pykernels

if os.environ.get("CYCLO_BACKEND", "").lower() != "python":
    try:
        from . import _kernels as kernels  # noqa: F811

        BACKEND = "compiled"
    except ImportError:
        pass

kaplan_range = kernels.kaplan_range
mobius_series = kernels.mobius_series
long_divide = kernels.long_divide
