"""Array kernels for bulk real, complex, and quaternion data.

The generic routines in fastops take any scalar objects and stay O(n), but
they pay Python interpreter cost per entry. These kernels are the fast lane
for numeric data: real and complex vectors as contiguous numpy arrays,
quaternion vectors as (n, 4) float component arrays (``*_q`` functions).

Two interchangeable backends implement the same signatures:

    backend_numba   @njit-compiled loops (default when numba imports)
    backend_numpy   vectorized pure numpy fallback

ARROWDPR1_BACKEND=auto|numba|numpy picks one at import time. The kernels
serve the nonsingular-diagonal branch only and use exact zero tests; det and
inv raise ValueError where the structure-swapping generic paths take over.

Tip positions here are 0-based; the converters below map the 1-based
container convention.
"""

from __future__ import annotations

import os

import numpy as np

from ..quaternion import Quaternion
from ..scalars import field_name
from ..structured import ArrowMatrix, DPR1Matrix

_requested = os.environ.get("ARROWDPR1_BACKEND", "auto").strip().lower() or "auto"
if _requested not in ("auto", "numba", "numpy"):
    raise ImportError(
        f"ARROWDPR1_BACKEND must be auto, numba or numpy, got {_requested!r}")

if _requested == "numpy":
    from . import backend_numpy as _impl
    BACKEND = "numpy"
else:
    try:
        from . import backend_numba as _impl
        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import backend_numpy as _impl
        BACKEND = "numpy"

arrow_matvec = _impl.arrow_matvec
arrow_det = _impl.arrow_det
arrow_inv = _impl.arrow_inv
dpr1_matvec = _impl.dpr1_matvec
dpr1_det = _impl.dpr1_det
dpr1_inv = _impl.dpr1_inv
arrow_matvec_q = _impl.arrow_matvec_q
arrow_det_q = _impl.arrow_det_q
arrow_inv_q = _impl.arrow_inv_q
dpr1_matvec_q = _impl.dpr1_matvec_q
dpr1_det_q = _impl.dpr1_det_q
dpr1_inv_q = _impl.dpr1_inv_q


def get_backend() -> str:
    return BACKEND


def quaternion_array(seq) -> np.ndarray:
    """Pack Quaternion scalars into an (n, 4) float component array."""
    out = np.empty((len(seq), 4), dtype=np.float64)
    for i, q in enumerate(seq):
        out[i, 0] = q.a
        out[i, 1] = q.b
        out[i, 2] = q.c
        out[i, 3] = q.d
    return out


def quaternion_list(arr: np.ndarray) -> list[Quaternion]:
    return [Quaternion(row[0], row[1], row[2], row[3]) for row in arr]


def arrow_arrays(a: ArrowMatrix) -> tuple:
    """(d, u, v, alpha, tip0) in kernel form for a real/complex/quaternion arrow."""
    field = field_name(a.alpha)
    if field == "quaternion":
        return (quaternion_array(a.diag), quaternion_array(a.u),
                quaternion_array(a.v), quaternion_array([a.alpha])[0], a.tip0)
    if field == "complex":
        dtype, cast = np.complex128, complex
    elif field == "real":
        dtype, cast = np.float64, float
    else:
        raise TypeError("kernels support real, complex, and quaternion entries")
    return (np.asarray(a.diag, dtype=dtype), np.asarray(a.u, dtype=dtype),
            np.asarray(a.v, dtype=dtype), cast(a.alpha), a.tip0)


def dpr1_arrays(a: DPR1Matrix) -> tuple:
    """(d, x, y, rho) in kernel form for a real/complex/quaternion DPR1 matrix."""
    field = field_name(a.rho)
    if field == "quaternion":
        return (quaternion_array(a.diag), quaternion_array(a.x),
                quaternion_array(a.y), quaternion_array([a.rho])[0])
    if field == "complex":
        dtype, cast = np.complex128, complex
    elif field == "real":
        dtype, cast = np.float64, float
    else:
        raise TypeError("kernels support real, complex, and quaternion entries")
    return (np.asarray(a.diag, dtype=dtype), np.asarray(a.x, dtype=dtype),
            np.asarray(a.y, dtype=dtype), cast(a.rho))
