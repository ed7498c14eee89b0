"""Kernel selection.

The compiled module is used when it imports; ``SHARKSFIN_PURE_PYTHON=1``
forces the fallback (used by the benchmark and the backend-parity tests).
"""
import os

from sharksfin.jets import _pykernel

size = _pykernel.size
index = _pykernel.index
monomials = _pykernel.monomials

mul_generic = _pykernel.mul
compose_generic = _pykernel.compose

try:
    if os.environ.get("SHARKSFIN_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernel requested")
    from sharksfin.jets import _ckernel
except ImportError:
    _ckernel = None

if _ckernel is not None:
    BACKEND = _ckernel.BACKEND
    mul_int = _ckernel.mul_int
    compose_int = _ckernel.compose_int
    mul_float = _ckernel.mul_float
    compose_float = _ckernel.compose_float
else:
    BACKEND = _pykernel.BACKEND
    mul_int = _pykernel.mul
    compose_int = _pykernel.compose
    mul_float = _pykernel.mul

    def compose_float(outer, g1, g2, order):
        return _pykernel.compose(outer, g1, g2, order, one=1.0)


def compiled_available() -> bool:
    try:
        from sharksfin.jets import _ckernel as _  # noqa: F401
    except ImportError:
        return False
    return True
