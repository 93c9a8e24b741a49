"""Pure numpy implementations of the array kernels.

Real and complex data use one set of functions (dtype decides); quaternion
data travels as (n, 4) float arrays through the ``*_q`` variants. Shapes and
dtypes are the caller's problem: the converters in the package interface
produce them, and the numba backend mirrors these signatures exactly.

Only the nonsingular-diagonal branch is served. det and inv raise ValueError
when a diagonal entry is exactly zero or a determinant factor vanishes; the
generic structured path handles those cases (and tolerances) instead.
"""

from __future__ import annotations

import numpy as np

_QONE = np.array([1.0, 0.0, 0.0, 0.0])
_QNEG = np.array([-1.0, 0.0, 0.0, 0.0])


def _require_nonzero_diag(d: np.ndarray) -> None:
    if d.size and not np.all(d != 0):
        raise ValueError("zero diagonal entry: use the generic structured path")


def arrow_matvec(d, u, v, alpha, tip, z):
    n = z.shape[0]
    w = np.empty_like(z)
    zt = z[tip]
    w[:tip] = d[:tip] * z[:tip] + u[:tip] * zt
    w[tip + 1:] = u[tip:] * zt + d[tip:] * z[tip + 1:]
    w[tip] = np.conj(v[:tip]) @ z[:tip] + alpha * zt + np.conj(v[tip:]) @ z[tip + 1:]
    return w


def arrow_det(d, u, v, alpha):
    _require_nonzero_diag(d)
    return np.prod(d) * (alpha - np.conj(v) @ (u / d))


def arrow_inv(d, u, v, alpha, tip):
    _require_nonzero_diag(d)
    n = d.shape[0] + 1
    dinv = 1.0 / d if d.size else d
    shaft = np.concatenate([np.arange(tip), np.arange(tip + 1, n)])
    delta = np.zeros(n, dtype=d.dtype)
    x = np.empty(n, dtype=d.dtype)
    y = np.empty(n, dtype=d.dtype)
    delta[shaft] = dinv
    x[shaft] = dinv * u
    y[shaft] = v / np.conj(d)
    x[tip] = -1.0
    y[tip] = -1.0
    denom = alpha - np.conj(v) @ (dinv * u)
    if denom == 0:
        raise ValueError("singular matrix: use the generic structured path")
    return delta, x, y, 1.0 / denom


def dpr1_matvec(d, x, y, rho, z):
    beta = rho * (np.conj(y) @ z)
    return d * z + x * beta


def dpr1_det(d, x, y, rho):
    _require_nonzero_diag(d)
    return np.prod(d) * (1.0 + (np.conj(y) @ (x / d)) * rho)


def dpr1_inv(d, x, y, rho):
    _require_nonzero_diag(d)
    dinv = 1.0 / d
    denom = 1.0 + (np.conj(y) @ (dinv * x)) * rho
    if denom == 0:
        raise ValueError("singular matrix: use the generic structured path")
    return dinv, dinv * x, y / np.conj(d), -rho / denom


# quaternion helpers on (..., 4) component arrays

def _qmul(p, q):
    pa, pb, pc, pd = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    qa, qb, qc, qd = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack(
        [
            pa * qa - pb * qb - pc * qc - pd * qd,
            pa * qb + pb * qa + pc * qd - pd * qc,
            pa * qc - pb * qd + pc * qa + pd * qb,
            pa * qd + pb * qc - pc * qb + pd * qa,
        ],
        axis=-1,
    )


def _qconj(p):
    out = p.copy()
    out[..., 1:] = -out[..., 1:]
    return out


def _qnorm2(p):
    return np.sum(p * p, axis=-1)


def _qinv(p):
    return _qconj(p) / _qnorm2(p)[..., None]


def _require_nonzero_diag_q(d: np.ndarray) -> None:
    if d.shape[0] and not np.all(_qnorm2(d) > 0):
        raise ValueError("zero diagonal entry: use the generic structured path")


def arrow_matvec_q(d, u, v, alpha, tip, z):
    n = z.shape[0]
    w = np.empty_like(z)
    zt = z[tip]
    w[:tip] = _qmul(d[:tip], z[:tip]) + _qmul(u[:tip], zt)
    w[tip + 1:] = _qmul(u[tip:], zt) + _qmul(d[tip:], z[tip + 1:])
    w[tip] = (_qmul(_qconj(v[:tip]), z[:tip]).sum(axis=0)
              + _qmul(alpha, zt)
              + _qmul(_qconj(v[tip:]), z[tip + 1:]).sum(axis=0))
    return w


def arrow_det_q(d, u, v, alpha):
    """Determinant magnitude; quaternion norms are multiplicative, so the
    ordered prefix product collapses to a product of norms."""
    _require_nonzero_diag_q(d)
    inner = alpha - _qmul(_qmul(_qconj(v), _qinv(d)), u).sum(axis=0)
    return float(np.prod(np.sqrt(_qnorm2(d))) * np.sqrt(_qnorm2(inner)))


def arrow_inv_q(d, u, v, alpha, tip):
    _require_nonzero_diag_q(d)
    n = d.shape[0] + 1
    dinv = _qinv(d) if d.shape[0] else d
    shaft = np.concatenate([np.arange(tip), np.arange(tip + 1, n)])
    delta = np.zeros((n, 4))
    x = np.empty((n, 4))
    y = np.empty((n, 4))
    delta[shaft] = dinv
    x[shaft] = _qmul(dinv, u)
    y[shaft] = _qmul(_qinv(_qconj(d)), v) if d.shape[0] else v
    x[tip] = _QNEG
    y[tip] = _QNEG
    denom = alpha - _qmul(_qmul(_qconj(v), dinv), u).sum(axis=0)
    if _qnorm2(denom) == 0:
        raise ValueError("singular matrix: use the generic structured path")
    return delta, x, y, _qinv(denom)


def dpr1_matvec_q(d, x, y, rho, z):
    beta = _qmul(rho, _qmul(_qconj(y), z).sum(axis=0))
    return _qmul(d, z) + _qmul(x, beta)


def dpr1_det_q(d, x, y, rho):
    _require_nonzero_diag_q(d)
    s = _qmul(_qmul(_qconj(y), _qinv(d)), x).sum(axis=0)
    inner = _QONE + _qmul(s, rho)
    return float(np.prod(np.sqrt(_qnorm2(d))) * np.sqrt(_qnorm2(inner)))


def dpr1_inv_q(d, x, y, rho):
    _require_nonzero_diag_q(d)
    dinv = _qinv(d)
    s = _qmul(_qmul(_qconj(y), dinv), x).sum(axis=0)
    denom = _QONE + _qmul(s, rho)
    if _qnorm2(denom) == 0:
        raise ValueError("singular matrix: use the generic structured path")
    rho_hat = -_qmul(rho, _qinv(denom))
    return dinv, _qmul(dinv, x), _qmul(_qinv(_qconj(d)), y), rho_hat
