"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
kernels take over.  ``use`` switches backends at runtime (benchmarks and the
backend-parity tests rely on it).
"""

from . import _kernels_py

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _kernels_py}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

active = _ckernels if _ckernels is not None else _kernels_py


def use(name):
    """Select the kernel backend by name and return the previous one."""
    global active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    previous = active.NAME
    active = BACKENDS[name]
    return previous


def current():
    return active.NAME
