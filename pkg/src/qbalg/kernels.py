"""Backend selection for the hot loops.

The compiled extension ``qbalg._kernels`` is used when it imports; the
pure-Python module ``qbalg._pykernels`` is the fallback. Setting
``QBALG_PURE=1`` forces the fallback.
"""
import os

from . import _pykernels

BACKENDS = {"python": _pykernels}

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None
else:
    BACKENDS["compiled"] = _compiled

if _compiled is not None and not os.environ.get("QBALG_PURE"):
    BACKEND = "compiled"
    _impl = _compiled
else:
    BACKEND = "python"
    _impl = _pykernels

orbit_labels = _impl.orbit_labels
braid_holds = _impl.braid_holds
canonical_form = _impl.canonical_form
quantum_binomial_search = _impl.quantum_binomial_search
