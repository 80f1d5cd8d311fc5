"""Kernel backend selection.

The compiled extension ``_core`` is preferred when it imported cleanly; the
pure-Python lane ``_core_py`` is the fallback.  Set ``SPECTRA_VERIFY_PURE=1``
to force the fallback (used by the lane-comparison benchmark and tests).
Both lanes implement the identical contracts, so everything above this
module is backend-agnostic.
"""

import os

from . import _core_py

if os.environ.get("SPECTRA_VERIFY_PURE", "") not in ("", "0"):
    _impl = _core_py
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _core_py

BACKEND = _impl.BACKEND_NAME

jacobi_eigenvalues = _impl.jacobi_eigenvalues
canonical_bits = _impl.canonical_bits
