"""O(n) operations on arrowhead and diagonal-plus-rank-one matrices.

Every routine walks each stored entry a bounded number of times. Products are
written out factor by factor, left to right, exactly as the closed formulas
state them; none of them assumes commuting entries, and there is no division
anywhere, only explicit inverses multiplied from the stated side.

Determinants report which formula branch applied. Over quaternions only the
determinant magnitude is well defined, so the value field is None there; for
block entries the determinant is itself a block and the magnitude field is
None (block_det_reduce collapses it to a base-field value).

Inverses return the dual structure when a diagonal entry is zero: an
arrowhead with a zero diagonal entry inverts to an arrowhead with the tip
moved to the zero's position, and a nonsingular-diagonal arrowhead inverts to
diagonal-plus-rank-one (and the same two ways around for DPR1 inputs).
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum

from .blockscalar import BlockScalar
from .errors import (DimensionError, SingularMatrixError, SingularScalarError,
                     StructureNotRepresentableError)
from .oracle import dense_det, dense_det_quaternion_magnitude
from .scalars import conj, field_name, inv, is_zero, mag, one_like, zero_like
from .structured import (ArrowMatrix, DPR1Matrix, StructuredInverse,
                         matrix_to_shaft, shaft_to_matrix)


class DetBranch(Enum):
    FULL_DIAGONAL = "full-diagonal"
    ONE_ZERO = "one-zero-diagonal"
    RANK_DEFICIENT = "rank-deficient"


@dataclass(frozen=True)
class DetResult:
    value: object
    magnitude: float | None
    branch: DetBranch


def _det_result(value, branch: DetBranch) -> DetResult:
    kind = field_name(value)
    if kind == "quaternion":
        return DetResult(None, mag(value), branch)
    if kind == "block":
        return DetResult(value, None, branch)
    return DetResult(value, mag(value), branch)


# Product sites the order sentinels may flip. Reversing any one of these must
# visibly change results over noncommutative entries; see commuted_product.
SWAP_SITES = ("dpr1-det-term", "arrow-inv-denominator-term", "dpr1-inv-rho")

_INJECTED_SWAP: str | None = None


def _prod(a, b, site: str):
    if _INJECTED_SWAP == site:
        return b * a
    return a * b


@contextmanager
def commuted_product(site: str):
    """Evaluate one marked product site in reversed order.

    Test hook: the formulas are order-sensitive, and the sentinel suite
    asserts that flipping any marked site produces visibly wrong results for
    quaternion instances.
    """
    global _INJECTED_SWAP
    if site not in SWAP_SITES:
        raise ValueError(f"unknown product site {site!r}, expected one of {SWAP_SITES}")
    prev = _INJECTED_SWAP
    _INJECTED_SWAP = site
    try:
        yield
    finally:
        _INJECTED_SWAP = prev


def _inversion_error(proto) -> Exception:
    if isinstance(proto, BlockScalar):
        return StructureNotRepresentableError(
            "a nonzero block entry is singular; the structured inverse "
            "formulas need every pivot entry invertible")
    return SingularMatrixError("matrix is singular")


def arrow_matvec(a: ArrowMatrix, z: list) -> list:
    n = a.n
    if len(z) != n:
        raise DimensionError(f"vector length {len(z)} != matrix size {n}")
    t = a.tip0
    d, u, v = a.diag, a.u, a.v
    zt = z[t]
    w = [None] * n
    for s in range(t):
        w[s] = d[s] * z[s] + u[s] * zt
    for m in range(t + 1, n):
        w[m] = u[m - 1] * zt + d[m - 1] * z[m]
    # tip row: shaft terms before the tip, the tip term, shaft terms after
    terms = [conj(v[s]) * z[s] for s in range(t)]
    terms.append(a.alpha * zt)
    terms.extend(conj(v[m - 1]) * z[m] for m in range(t + 1, n))
    acc = terms[0]
    for term in terms[1:]:
        acc = acc + term
    w[t] = acc
    return w


def dpr1_matvec(a: DPR1Matrix, z: list) -> list:
    n = a.n
    if len(z) != n:
        raise DimensionError(f"vector length {len(z)} != matrix size {n}")
    dot = conj(a.y[0]) * z[0]
    for l in range(1, n):
        dot = dot + conj(a.y[l]) * z[l]
    beta = a.rho * dot
    return [a.diag[i] * z[i] + a.x[i] * beta for i in range(n)]


def arrow_det(a: ArrowMatrix, tol: float = 0.0) -> DetResult:
    d = a.diag
    n = a.n
    zeros = [s for s in range(n - 1) if is_zero(d[s], tol)]
    if len(zeros) >= 2:
        return _det_result(zero_like(a.alpha), DetBranch.RANK_DEFICIENT)
    try:
        if zeros:
            # det = -(d_1 .. d_{i-1}) * conj(v_i) * (d_{i+1} .. d_{n-1}) * u_i
            i = zeros[0]
            val = None
            for s in range(i):
                val = d[s] if val is None else val * d[s]
            cv = conj(a.v[i])
            val = cv if val is None else val * cv
            for s in range(i + 1, n - 1):
                val = val * d[s]
            val = val * a.u[i]
            return _det_result(-val, DetBranch.ONE_ZERO)
        # det = (d_1 .. d_{n-1}) * (alpha - sum conj(v_l) * inv(d_l) * u_l)
        ssum = None
        for s in range(n - 1):
            term = (conj(a.v[s]) * inv(d[s], tol)) * a.u[s]
            ssum = term if ssum is None else ssum + term
        inner = a.alpha if ssum is None else a.alpha - ssum
        prod = None
        for s in range(n - 1):
            prod = d[s] if prod is None else prod * d[s]
        val = inner if prod is None else prod * inner
        return _det_result(val, DetBranch.FULL_DIAGONAL)
    except SingularScalarError as e:
        raise _inversion_error(a.alpha) from e


def dpr1_det(a: DPR1Matrix, tol: float = 0.0) -> DetResult:
    d = a.diag
    n = a.n
    zeros = [i for i in range(n) if is_zero(d[i], tol)]
    if len(zeros) >= 2:
        return _det_result(zero_like(a.rho), DetBranch.RANK_DEFICIENT)
    try:
        if zeros:
            # det = (delta_1 .. delta_{i-1}) * conj(y_i)
            #       * (delta_{i+1} .. delta_n) * x_i * rho
            i = zeros[0]
            val = None
            for j in range(i):
                val = d[j] if val is None else val * d[j]
            cy = conj(a.y[i])
            val = cy if val is None else val * cy
            for j in range(i + 1, n):
                val = val * d[j]
            val = val * a.x[i]
            val = val * a.rho
            return _det_result(val, DetBranch.ONE_ZERO)
        # det = (delta_1 .. delta_n) * (1 + sum(conj(y_l) * inv(delta_l) * x_l) * rho)
        ssum = None
        for l in range(n):
            term = _prod(conj(a.y[l]), inv(d[l], tol), "dpr1-det-term") * a.x[l]
            ssum = term if ssum is None else ssum + term
        inner = one_like(a.rho) + ssum * a.rho
        prod = d[0]
        for j in range(1, n):
            prod = prod * d[j]
        return _det_result(prod * inner, DetBranch.FULL_DIAGONAL)
    except SingularScalarError as e:
        raise _inversion_error(a.rho) from e


def arrow_inv(a: ArrowMatrix, tol: float = 0.0) -> StructuredInverse:
    n, t = a.n, a.tip0
    d, u, v = a.diag, a.u, a.v
    zeros = [s for s in range(n - 1) if is_zero(d[s], tol)]
    if len(zeros) >= 2:
        raise SingularMatrixError("matrix has two or more zero diagonal entries")
    try:
        if not zeros:
            # inverse is diagonal-plus-rank-one:
            #   delta_m = inv(d_s) off the tip, 0 at the tip
            #   x_m = inv(d_s) * u_s,        -1 at the tip
            #   y_m = inv(conj(d_s)) * v_s,  -1 at the tip
            #   rho = inv(alpha - sum conj(v_l) * inv(d_l) * u_l)
            one = one_like(a.alpha)
            delta = [None] * n
            x = [None] * n
            y = [None] * n
            ssum = None
            for s in range(n - 1):
                m = shaft_to_matrix(t, s)
                di = inv(d[s], tol)
                delta[m] = di
                x[m] = di * u[s]
                y[m] = inv(conj(d[s]), tol) * v[s]
                term = _prod(conj(v[s]), di, "arrow-inv-denominator-term") * u[s]
                ssum = term if ssum is None else ssum + term
            delta[t] = zero_like(a.alpha)
            x[t] = -one
            y[t] = -one
            denom = a.alpha if ssum is None else a.alpha - ssum
            if is_zero(denom, tol):
                raise SingularMatrixError(
                    "zero determinant: alpha - v* D^{-1} u vanishes")
            return DPR1Matrix(delta, x, y, inv(denom, tol))
        # one zero diagonal entry: the inverse is arrowhead again, with its
        # tip at the zero's position (tip and zero change places)
        j = zeros[0]
        if is_zero(u[j], tol) or is_zero(v[j], tol):
            raise SingularMatrixError(
                "zero diagonal entry with zero u or v entry is singular")
        m_z = shaft_to_matrix(t, j)
        uj_inv = inv(u[j], tol)
        vj_inv = inv(v[j], tol)
        vjc_inv = inv(conj(v[j]), tol)
        nd = [None] * (n - 1)
        nu = [None] * (n - 1)
        nv = [None] * (n - 1)
        ssum = None
        for s in range(n - 1):
            if s == j:
                continue
            m = shaft_to_matrix(t, s)
            slot = matrix_to_shaft(m_z, m)
            di = inv(d[s], tol)
            nd[slot] = di
            nu[slot] = -((di * u[s]) * uj_inv)
            nv[slot] = -((inv(conj(d[s]), tol) * v[s]) * vj_inv)
            term = (conj(v[s]) * di) * u[s]
            ssum = term if ssum is None else ssum + term
        slot_t = matrix_to_shaft(m_z, t)
        nd[slot_t] = zero_like(a.alpha)
        nu[slot_t] = uj_inv
        nv[slot_t] = vj_inv
        inner = -a.alpha if ssum is None else ssum - a.alpha
        na = (vjc_inv * inner) * uj_inv
        return ArrowMatrix(nd, nu, nv, na, tip=m_z + 1)
    except SingularScalarError as e:
        raise _inversion_error(a.alpha) from e


def dpr1_inv(a: DPR1Matrix, tol: float = 0.0) -> StructuredInverse:
    d = a.diag
    n = a.n
    zeros = [i for i in range(n) if is_zero(d[i], tol)]
    if len(zeros) >= 2:
        raise SingularMatrixError("matrix has two or more zero diagonal entries")
    try:
        if not zeros:
            # inverse is diagonal-plus-rank-one again:
            #   delta_l = inv(delta_l), x_l = inv(delta_l) * x_l,
            #   y_l = inv(conj(delta_l)) * y_l,
            #   rho = -rho * inv(1 + sum(conj(y_l) * inv(delta_l) * x_l) * rho)
            ndl = []
            nx = []
            ny = []
            ssum = None
            for l in range(n):
                di = inv(d[l], tol)
                ndl.append(di)
                nx.append(di * a.x[l])
                ny.append(inv(conj(d[l]), tol) * a.y[l])
                term = (conj(a.y[l]) * di) * a.x[l]
                ssum = term if ssum is None else ssum + term
            denom = one_like(a.rho) + ssum * a.rho
            if is_zero(denom, tol):
                raise SingularMatrixError(
                    "zero determinant: 1 + y* Delta^{-1} x rho vanishes")
            rho_hat = -_prod(a.rho, inv(denom, tol), "dpr1-inv-rho")
            return DPR1Matrix(ndl, nx, ny, rho_hat)
        # one zero diagonal entry: the inverse is arrowhead with the tip at
        # the zero's position
        j = zeros[0]
        if is_zero(a.x[j], tol) or is_zero(a.y[j], tol) or is_zero(a.rho, tol):
            raise SingularMatrixError(
                "zero diagonal entry needs invertible x, y entries and rho")
        xj_inv = inv(a.x[j], tol)
        yj_inv = inv(a.y[j], tol)
        yjc_inv = inv(conj(a.y[j]), tol)
        nd = []
        nu = []
        nv = []
        ssum = None
        for m in range(n):
            if m == j:
                continue
            di = inv(d[m], tol)
            nd.append(di)
            nu.append(-((di * a.x[m]) * xj_inv))
            nv.append(-((inv(conj(d[m]), tol) * a.y[m]) * yj_inv))
            term = (conj(a.y[m]) * di) * a.x[m]
            ssum = term if ssum is None else ssum + term
        inner = inv(a.rho, tol) if ssum is None else inv(a.rho, tol) + ssum
        na = (yjc_inv * inner) * xj_inv
        return ArrowMatrix(nd, nu, nv, na, tip=j + 1)
    except SingularScalarError as e:
        raise _inversion_error(a.rho) from e


def block_det_reduce(res: DetResult):
    """Collapse a block determinant to a base-field value.

    The determinant of a block-entry matrix is itself a k x k block; taking
    the base-field determinant of that block (determinant magnitude for
    quaternion bases) gives the determinant of the flattened nk x nk matrix.
    """
    b = res.value
    if not isinstance(b, BlockScalar):
        raise TypeError("block_det_reduce expects a block determinant result")
    rows = [[b.entries.item((i, j)) for j in range(b.k)] for i in range(b.k)]
    if b.base_field == "quaternion":
        return dense_det_quaternion_magnitude(rows)
    return dense_det(rows)
