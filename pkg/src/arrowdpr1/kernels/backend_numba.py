"""Numba-compiled implementations of the array kernels.

Same signatures and semantics as backend_numpy; see that module for the
contract. Real and complex specializations come from numba's dispatch on the
array dtype. Quaternion math is spelled out on (n, 4) component arrays, with
inv(q) = conj(q) / |q|^2 and inv(conj(q)) = q / |q|^2 inlined.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def arrow_matvec(d, u, v, alpha, tip, z):
    n = z.shape[0]
    w = np.empty_like(z)
    vc = np.conj(v)
    zt = z[tip]
    acc = alpha * zt
    for s in range(tip):
        w[s] = d[s] * z[s] + u[s] * zt
        acc += vc[s] * z[s]
    for m in range(tip + 1, n):
        w[m] = u[m - 1] * zt + d[m - 1] * z[m]
        acc += vc[m - 1] * z[m]
    w[tip] = acc
    return w


@njit(cache=True)
def arrow_det(d, u, v, alpha):
    m = d.shape[0]
    vc = np.conj(v)
    inner = alpha
    for s in range(m):
        if d[s] == 0:
            raise ValueError("zero diagonal entry: use the generic structured path")
        inner -= vc[s] * (u[s] / d[s])
    det = inner
    for s in range(m):
        det *= d[s]
    return det


@njit(cache=True)
def arrow_inv(d, u, v, alpha, tip):
    m = d.shape[0]
    n = m + 1
    delta = np.zeros(n, d.dtype)
    x = np.empty(n, d.dtype)
    y = np.empty(n, d.dtype)
    vc = np.conj(v)
    dc = np.conj(d)
    denom = alpha
    for s in range(m):
        if d[s] == 0:
            raise ValueError("zero diagonal entry: use the generic structured path")
        mp = s if s < tip else s + 1
        di = 1.0 / d[s]
        delta[mp] = di
        x[mp] = di * u[s]
        y[mp] = v[s] / dc[s]
        denom -= vc[s] * di * u[s]
    x[tip] = -1.0
    y[tip] = -1.0
    if denom == 0:
        raise ValueError("singular matrix: use the generic structured path")
    return delta, x, y, 1.0 / denom


@njit(cache=True)
def dpr1_matvec(d, x, y, rho, z):
    n = z.shape[0]
    yc = np.conj(y)
    dot = yc[0] * z[0]
    for l in range(1, n):
        dot += yc[l] * z[l]
    beta = rho * dot
    w = np.empty_like(z)
    for i in range(n):
        w[i] = d[i] * z[i] + x[i] * beta
    return w


@njit(cache=True)
def dpr1_det(d, x, y, rho):
    n = d.shape[0]
    yc = np.conj(y)
    s = rho - rho
    for l in range(n):
        if d[l] == 0:
            raise ValueError("zero diagonal entry: use the generic structured path")
        s += yc[l] * (x[l] / d[l])
    det = 1.0 + s * rho
    for l in range(n):
        det *= d[l]
    return det


@njit(cache=True)
def dpr1_inv(d, x, y, rho):
    n = d.shape[0]
    yc = np.conj(y)
    dc = np.conj(d)
    delta = np.empty(n, d.dtype)
    nx = np.empty(n, d.dtype)
    ny = np.empty(n, d.dtype)
    s = rho - rho
    for l in range(n):
        if d[l] == 0:
            raise ValueError("zero diagonal entry: use the generic structured path")
        di = 1.0 / d[l]
        delta[l] = di
        nx[l] = di * x[l]
        ny[l] = y[l] / dc[l]
        s += yc[l] * di * x[l]
    denom = 1.0 + s * rho
    if denom == 0:
        raise ValueError("singular matrix: use the generic structured path")
    return delta, nx, ny, -rho / denom


@njit(cache=True)
def _qm(pa, pb, pc, pd, qa, qb, qc, qd):
    return (pa * qa - pb * qb - pc * qc - pd * qd,
            pa * qb + pb * qa + pc * qd - pd * qc,
            pa * qc - pb * qd + pc * qa + pd * qb,
            pa * qd + pb * qc - pc * qb + pd * qa)


@njit(cache=True)
def arrow_matvec_q(d, u, v, alpha, tip, z):
    n = z.shape[0]
    w = np.empty_like(z)
    za = z[tip, 0]
    zb = z[tip, 1]
    zc = z[tip, 2]
    zd = z[tip, 3]
    ta, tb, tc, td = _qm(alpha[0], alpha[1], alpha[2], alpha[3], za, zb, zc, zd)
    for s in range(tip):
        ra, rb, rc, rd = _qm(d[s, 0], d[s, 1], d[s, 2], d[s, 3],
                             z[s, 0], z[s, 1], z[s, 2], z[s, 3])
        sa, sb, sc, sd = _qm(u[s, 0], u[s, 1], u[s, 2], u[s, 3], za, zb, zc, zd)
        w[s, 0] = ra + sa
        w[s, 1] = rb + sb
        w[s, 2] = rc + sc
        w[s, 3] = rd + sd
        ca, cb, cc, cd = _qm(v[s, 0], -v[s, 1], -v[s, 2], -v[s, 3],
                             z[s, 0], z[s, 1], z[s, 2], z[s, 3])
        ta += ca
        tb += cb
        tc += cc
        td += cd
    for m in range(tip + 1, n):
        s = m - 1
        ra, rb, rc, rd = _qm(u[s, 0], u[s, 1], u[s, 2], u[s, 3], za, zb, zc, zd)
        sa, sb, sc, sd = _qm(d[s, 0], d[s, 1], d[s, 2], d[s, 3],
                             z[m, 0], z[m, 1], z[m, 2], z[m, 3])
        w[m, 0] = ra + sa
        w[m, 1] = rb + sb
        w[m, 2] = rc + sc
        w[m, 3] = rd + sd
        ca, cb, cc, cd = _qm(v[s, 0], -v[s, 1], -v[s, 2], -v[s, 3],
                             z[m, 0], z[m, 1], z[m, 2], z[m, 3])
        ta += ca
        tb += cb
        tc += cc
        td += cd
    w[tip, 0] = ta
    w[tip, 1] = tb
    w[tip, 2] = tc
    w[tip, 3] = td
    return w


@njit(cache=True)
def arrow_det_q(d, u, v, alpha):
    m = d.shape[0]
    ia = alpha[0]
    ib = alpha[1]
    ic = alpha[2]
    id_ = alpha[3]
    dm = 1.0
    for s in range(m):
        n2 = (d[s, 0] * d[s, 0] + d[s, 1] * d[s, 1]
              + d[s, 2] * d[s, 2] + d[s, 3] * d[s, 3])
        if n2 == 0.0:
            raise ValueError("zero diagonal entry: use the generic structured path")
        wa = d[s, 0] / n2
        wb = -d[s, 1] / n2
        wc = -d[s, 2] / n2
        wd = -d[s, 3] / n2
        pa, pb, pc, pd = _qm(v[s, 0], -v[s, 1], -v[s, 2], -v[s, 3], wa, wb, wc, wd)
        qa, qb, qc, qd = _qm(pa, pb, pc, pd, u[s, 0], u[s, 1], u[s, 2], u[s, 3])
        ia -= qa
        ib -= qb
        ic -= qc
        id_ -= qd
        dm *= np.sqrt(n2)
    return dm * np.sqrt(ia * ia + ib * ib + ic * ic + id_ * id_)


@njit(cache=True)
def arrow_inv_q(d, u, v, alpha, tip):
    m = d.shape[0]
    n = m + 1
    delta = np.zeros((n, 4))
    x = np.empty((n, 4))
    y = np.empty((n, 4))
    da = alpha[0]
    db = alpha[1]
    dc = alpha[2]
    dd = alpha[3]
    for s in range(m):
        n2 = (d[s, 0] * d[s, 0] + d[s, 1] * d[s, 1]
              + d[s, 2] * d[s, 2] + d[s, 3] * d[s, 3])
        if n2 == 0.0:
            raise ValueError("zero diagonal entry: use the generic structured path")
        mp = s if s < tip else s + 1
        wa = d[s, 0] / n2
        wb = -d[s, 1] / n2
        wc = -d[s, 2] / n2
        wd = -d[s, 3] / n2
        delta[mp, 0] = wa
        delta[mp, 1] = wb
        delta[mp, 2] = wc
        delta[mp, 3] = wd
        xa, xb, xc, xd = _qm(wa, wb, wc, wd, u[s, 0], u[s, 1], u[s, 2], u[s, 3])
        x[mp, 0] = xa
        x[mp, 1] = xb
        x[mp, 2] = xc
        x[mp, 3] = xd
        ya, yb, yc, yd = _qm(d[s, 0] / n2, d[s, 1] / n2, d[s, 2] / n2, d[s, 3] / n2,
                             v[s, 0], v[s, 1], v[s, 2], v[s, 3])
        y[mp, 0] = ya
        y[mp, 1] = yb
        y[mp, 2] = yc
        y[mp, 3] = yd
        pa, pb, pc, pd = _qm(v[s, 0], -v[s, 1], -v[s, 2], -v[s, 3], wa, wb, wc, wd)
        qa, qb, qc, qd = _qm(pa, pb, pc, pd, u[s, 0], u[s, 1], u[s, 2], u[s, 3])
        da -= qa
        db -= qb
        dc -= qc
        dd -= qd
    x[tip, 0] = -1.0
    x[tip, 1] = 0.0
    x[tip, 2] = 0.0
    x[tip, 3] = 0.0
    y[tip, 0] = -1.0
    y[tip, 1] = 0.0
    y[tip, 2] = 0.0
    y[tip, 3] = 0.0
    n2d = da * da + db * db + dc * dc + dd * dd
    if n2d == 0.0:
        raise ValueError("singular matrix: use the generic structured path")
    rho = np.empty(4)
    rho[0] = da / n2d
    rho[1] = -db / n2d
    rho[2] = -dc / n2d
    rho[3] = -dd / n2d
    return delta, x, y, rho


@njit(cache=True)
def dpr1_matvec_q(d, x, y, rho, z):
    n = z.shape[0]
    dota = 0.0
    dotb = 0.0
    dotc = 0.0
    dotd = 0.0
    for l in range(n):
        ca, cb, cc, cd = _qm(y[l, 0], -y[l, 1], -y[l, 2], -y[l, 3],
                             z[l, 0], z[l, 1], z[l, 2], z[l, 3])
        dota += ca
        dotb += cb
        dotc += cc
        dotd += cd
    ba, bb, bc, bd = _qm(rho[0], rho[1], rho[2], rho[3], dota, dotb, dotc, dotd)
    w = np.empty_like(z)
    for i in range(n):
        ra, rb, rc, rd = _qm(d[i, 0], d[i, 1], d[i, 2], d[i, 3],
                             z[i, 0], z[i, 1], z[i, 2], z[i, 3])
        sa, sb, sc, sd = _qm(x[i, 0], x[i, 1], x[i, 2], x[i, 3], ba, bb, bc, bd)
        w[i, 0] = ra + sa
        w[i, 1] = rb + sb
        w[i, 2] = rc + sc
        w[i, 3] = rd + sd
    return w


@njit(cache=True)
def dpr1_det_q(d, x, y, rho):
    n = d.shape[0]
    sa = 0.0
    sb = 0.0
    sc = 0.0
    sd = 0.0
    dm = 1.0
    for l in range(n):
        n2 = (d[l, 0] * d[l, 0] + d[l, 1] * d[l, 1]
              + d[l, 2] * d[l, 2] + d[l, 3] * d[l, 3])
        if n2 == 0.0:
            raise ValueError("zero diagonal entry: use the generic structured path")
        wa = d[l, 0] / n2
        wb = -d[l, 1] / n2
        wc = -d[l, 2] / n2
        wd = -d[l, 3] / n2
        pa, pb, pc, pd = _qm(y[l, 0], -y[l, 1], -y[l, 2], -y[l, 3], wa, wb, wc, wd)
        qa, qb, qc, qd = _qm(pa, pb, pc, pd, x[l, 0], x[l, 1], x[l, 2], x[l, 3])
        sa += qa
        sb += qb
        sc += qc
        sd += qd
        dm *= np.sqrt(n2)
    ta, tb, tc, td = _qm(sa, sb, sc, sd, rho[0], rho[1], rho[2], rho[3])
    ia = 1.0 + ta
    return dm * np.sqrt(ia * ia + tb * tb + tc * tc + td * td)


@njit(cache=True)
def dpr1_inv_q(d, x, y, rho):
    n = d.shape[0]
    delta = np.empty((n, 4))
    nx = np.empty((n, 4))
    ny = np.empty((n, 4))
    sa = 0.0
    sb = 0.0
    sc = 0.0
    sd = 0.0
    for l in range(n):
        n2 = (d[l, 0] * d[l, 0] + d[l, 1] * d[l, 1]
              + d[l, 2] * d[l, 2] + d[l, 3] * d[l, 3])
        if n2 == 0.0:
            raise ValueError("zero diagonal entry: use the generic structured path")
        wa = d[l, 0] / n2
        wb = -d[l, 1] / n2
        wc = -d[l, 2] / n2
        wd = -d[l, 3] / n2
        delta[l, 0] = wa
        delta[l, 1] = wb
        delta[l, 2] = wc
        delta[l, 3] = wd
        xa, xb, xc, xd = _qm(wa, wb, wc, wd, x[l, 0], x[l, 1], x[l, 2], x[l, 3])
        nx[l, 0] = xa
        nx[l, 1] = xb
        nx[l, 2] = xc
        nx[l, 3] = xd
        ya, yb, yc, yd = _qm(d[l, 0] / n2, d[l, 1] / n2, d[l, 2] / n2, d[l, 3] / n2,
                             y[l, 0], y[l, 1], y[l, 2], y[l, 3])
        ny[l, 0] = ya
        ny[l, 1] = yb
        ny[l, 2] = yc
        ny[l, 3] = yd
        pa, pb, pc, pd = _qm(y[l, 0], -y[l, 1], -y[l, 2], -y[l, 3], wa, wb, wc, wd)
        qa, qb, qc, qd = _qm(pa, pb, pc, pd, x[l, 0], x[l, 1], x[l, 2], x[l, 3])
        sa += qa
        sb += qb
        sc += qc
        sd += qd
    ta, tb, tc, td = _qm(sa, sb, sc, sd, rho[0], rho[1], rho[2], rho[3])
    da = 1.0 + ta
    n2d = da * da + tb * tb + tc * tc + td * td
    if n2d == 0.0:
        raise ValueError("singular matrix: use the generic structured path")
    ia = da / n2d
    ib = -tb / n2d
    ic = -tc / n2d
    id_ = -td / n2d
    ra, rb, rc, rd = _qm(rho[0], rho[1], rho[2], rho[3], ia, ib, ic, id_)
    rho_hat = np.empty(4)
    rho_hat[0] = -ra
    rho_hat[1] = -rb
    rho_hat[2] = -rc
    rho_hat[3] = -rd
    return delta, nx, ny, rho_hat
