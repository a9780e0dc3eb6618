"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise, or when
``CYCPRES_PURE_PYTHON`` is set to a non-empty value other than ``0``, the
pure-Python implementation is used.  Both expose identical functions.
"""

import os

from . import _kernels_py

if os.environ.get("CYCPRES_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
canonical_form = _impl.canonical_form
is_canonical = _impl.is_canonical
enumerate_prefix = _impl.enumerate_prefix
star_edges = _impl.star_edges
girth = _impl.girth
eccentricities = _impl.eccentricities


def available_backends():
    """Map backend name to kernel module for every backend that imports."""
    found = {"python": _kernels_py}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        found["cython"] = _kernels
    return found
