"""Dense reference implementations.

Everything here is deliberately plain: list-of-lists matrices, textbook
elimination, no shortcuts shared with the structured fast paths. The fast
operations are tested against these routines.

Determinants by LU factorization require commuting entries, so dense_det
accepts floats and complexes only. Quaternion matrices get a determinant
magnitude through the 2x2 complex representation of each entry. Inverses use
Gauss-Jordan elimination with left row operations, which is valid for every
supported entry type.
"""

from __future__ import annotations

import math

import numpy as np

from ._linalg import gauss_jordan_inv
from .blockscalar import BlockScalar
from .errors import DimensionError
from .quaternion import Quaternion, embed
from .scalars import inv, mag, one_like, zero_like


def _check_square(m: list[list]) -> int:
    n = len(m)
    if n == 0 or any(len(r) != n for r in m):
        raise DimensionError("matrix must be square and nonempty")
    return n


def dense_matvec(m: list[list], z: list) -> list:
    n = _check_square(m)
    if len(z) != n:
        raise DimensionError(f"vector length {len(z)} != matrix size {n}")
    out = []
    for i in range(n):
        acc = m[i][0] * z[0]
        for j in range(1, n):
            acc = acc + m[i][j] * z[j]
        out.append(acc)
    return out


def mat_mul(a: list[list], b: list[list]) -> list[list]:
    rows, inner, cols = len(a), len(b), len(b[0])
    if any(len(r) != inner for r in a):
        raise DimensionError("inner dimensions do not match")
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = a[i][0] * b[0][j]
            for l in range(1, inner):
                acc = acc + a[i][l] * b[l][j]
            row.append(acc)
        out.append(row)
    return out


def identity(n: int, proto) -> list[list]:
    one, zero = one_like(proto), zero_like(proto)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def dense_det(m: list[list]):
    """Determinant by LU with partial pivoting. Commuting entries only."""
    n = _check_square(m)
    if isinstance(m[0][0], (Quaternion, BlockScalar)):
        raise TypeError("elimination determinant needs commuting entries; "
                        "use dense_det_quaternion_magnitude for quaternions")
    work = [list(r) for r in m]
    sign = 1.0
    det = None
    for col in range(n):
        piv = max(range(col, n), key=lambda r: mag(work[r][col]))
        if mag(work[piv][col]) == 0.0:
            return zero_like(m[0][0])
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            sign = -sign
        p = work[col][col]
        det = p if det is None else det * p
        p_inv = inv(p)
        for r in range(col + 1, n):
            f = work[r][col] * p_inv
            if mag(f) == 0.0:
                continue
            for j in range(col + 1, n):
                work[r][j] = work[r][j] - f * work[col][j]
    return sign * det


def dense_inv(m: list[list], tol: float = 0.0) -> list[list]:
    _check_square(m)
    return gauss_jordan_inv([list(r) for r in m], tol)


def dense_det_quaternion_magnitude(m: list[list]) -> float:
    """|det| of a quaternion matrix via the 2x2 complex representation.

    Each entry is replaced by its 2x2 complex image and the determinant of
    the resulting 2n x 2n complex matrix is taken; it is real and nonnegative
    in exact arithmetic, and its square root is the determinant magnitude.
    """
    n = _check_square(m)
    big = [[complex(0.0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            e = embed(m[i][j])
            for bi in range(2):
                for bj in range(2):
                    big[2 * i + bi][2 * j + bj] = complex(e[bi, bj])
    det = dense_det(big)
    # rounding scales with |det|, so the realness check is relative
    if abs(det.imag) > 1e-9 * max(1.0, abs(det)):
        raise ArithmeticError(f"embedded determinant not real: {det!r}")
    return math.sqrt(max(det.real, 0.0))


def expand_block(m: list[list]) -> list[list]:
    """Flatten a (possibly rectangular) matrix of k-by-k blocks to base scalars."""
    rows = len(m)
    cols = len(m[0])
    if any(len(r) != cols for r in m):
        raise DimensionError("matrix must be rectangular")
    k = m[0][0].k
    out = [[None] * (cols * k) for _ in range(rows * k)]
    for i in range(rows):
        for j in range(cols):
            e = m[i][j]
            if not isinstance(e, BlockScalar) or e.k != k:
                raise TypeError("all entries must be BlockScalar of one size")
            for bi in range(k):
                for bj in range(k):
                    out[i * k + bi][j * k + bj] = e.entries.item((bi, bj))
    return out


def flatten_structured(m) -> np.ndarray:
    """Assemble the nk-by-nk base-scalar array of a block Arrow or DPR1 matrix.

    Rebuilds the layout with array slicing, sharing nothing with to_dense, so
    the two constructions check each other. Numeric block bases only.
    """
    from .structured import ArrowMatrix
    blocks = list(m.diag)
    if isinstance(m, ArrowMatrix):
        blocks += list(m.u) + list(m.v) + [m.alpha]
    else:
        blocks += list(m.x) + list(m.y) + [m.rho]
    if any(b.entries.dtype == object for b in blocks):
        raise TypeError("flattening needs a numeric block base")
    k = blocks[-1].k
    n = m.n
    dtype = np.result_type(*(b.entries.dtype for b in blocks))
    out = np.zeros((n, k, n, k), dtype=dtype)
    if isinstance(m, ArrowMatrix):
        t = m.tip0
        for s, p in enumerate(q for q in range(n) if q != t):
            out[p, :, p, :] = m.diag[s].entries
            out[p, :, t, :] = m.u[s].entries
            out[t, :, p, :] = m.v[s].entries.conj().T
        out[t, :, t, :] = m.alpha.entries
    else:
        xs = np.stack([b.entries for b in m.x]).astype(dtype)
        ys = np.stack([b.entries for b in m.y]).astype(dtype)
        out += np.einsum("ikl,jml->ikjm", xs @ m.rho.entries, ys.conj())
        for i in range(n):
            out[i, :, i, :] += m.diag[i].entries
    return out.reshape(n * k, n * k)


def flatten_block_vector(z: list) -> np.ndarray:
    """Stack the k-by-k entries of a block vector into an (n*k, k) array."""
    if any(b.entries.dtype == object for b in z):
        raise TypeError("flattening needs a numeric block base")
    return np.concatenate([np.asarray(b.entries) for b in z], axis=0)


def max_mag(m: list[list]) -> float:
    return max(mag(e) for row in m for e in row)


def max_abs_diff(a: list[list], b: list[list]) -> float:
    if len(a) != len(b) or any(len(ra) != len(rb) for ra, rb in zip(a, b)):
        raise DimensionError("shapes differ")
    return max(mag(ea - eb) for ra, rb in zip(a, b) for ea, eb in zip(ra, rb))


def vec_max_abs_diff(a: list, b: list) -> float:
    if len(a) != len(b):
        raise DimensionError("lengths differ")
    return max(mag(ea - eb) for ea, eb in zip(a, b))
