"""Numeric kernel backend selection.

Two interchangeable implementations exist:

* ``lumispec._kernels_cy`` - Cython extension compiled at install time
* ``lumispec._kernels_np`` - numpy fallback, always available

The compiled backend is preferred when importable. Set the environment
variable ``LUMISPEC_KERNELS=numpy`` or ``LUMISPEC_KERNELS=compiled`` to force
a specific backend (forcing ``compiled`` raises if the extension is missing).
"""

from __future__ import annotations

import os

_forced = os.environ.get("LUMISPEC_KERNELS", "").strip().lower()

if _forced == "numpy":
    from . import _kernels_np as _impl
elif _forced == "compiled":
    from . import _kernels_cy as _impl  # type: ignore[no-redef]
elif _forced:
    raise ImportError(f"unknown LUMISPEC_KERNELS value {_forced!r} "
                      "(expected 'numpy' or 'compiled')")
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_np as _impl  # type: ignore[no-redef]

interp_linear_zero = _impl.interp_linear_zero
weighted_sum = _impl.weighted_sum
planck_law = _impl.planck_law
polyval = _impl.polyval
dark_subtract = _impl.dark_subtract


def active_backend() -> str:
    """Name of the kernel backend selected at import: 'compiled' or 'numpy'."""
    return _impl.BACKEND
