"""Seeded random instances for tests, verification, and benchmarks.

All functions take a numpy Generator so callers control reproducibility.
``mag_band=True`` draws scalars with magnitude in [1/2, 2], which keeps
determinant products of moderate sizes away from under- and overflow. Block
entries are drawn diagonally dominant so they are safely invertible; use
``zero_at`` or singular_nonzero_block for the degenerate cases.
"""

from __future__ import annotations

import numpy as np

from .blockscalar import BlockScalar
from .quaternion import Quaternion
from .scalars import one_like
from .structured import ArrowMatrix, DPR1Matrix

FIELDS = ("real", "complex", "quaternion", "block")


def sample_scalar(rng: np.random.Generator, field: str, *, mag_band: bool = False,
                  block_k: int = 2, block_base: str = "real"):
    if field == "real":
        if mag_band:
            return float(rng.choice([-1.0, 1.0]) * rng.uniform(0.5, 2.0))
        return float(rng.uniform(-1.0, 1.0))
    if field == "complex":
        if mag_band:
            r, phi = rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * np.pi)
            return complex(r * np.cos(phi), r * np.sin(phi))
        return complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
    if field == "quaternion":
        if mag_band:
            w = rng.normal(size=4)
            w = w / np.linalg.norm(w) * rng.uniform(0.5, 2.0)
            return Quaternion(w[0], w[1], w[2], w[3])
        w = rng.uniform(-1.0, 1.0, size=4)
        return Quaternion(w[0], w[1], w[2], w[3])
    if field == "block":
        k = block_k
        if block_base == "quaternion":
            out = np.empty((k, k), dtype=object)
            for i in range(k):
                for j in range(k):
                    q = sample_scalar(rng, "quaternion")
                    out[i, j] = Quaternion(0.5 * q.a + (2.0 if i == j else 0.0),
                                           0.5 * q.b, 0.5 * q.c, 0.5 * q.d)
            return BlockScalar(out)
        return _block_batch(rng, 1, k, block_base)[0]
    raise ValueError(f"unknown field {field!r}")


def _block_batch(rng: np.random.Generator, n: int, k: int, base: str) -> list:
    """n diagonally dominant k-by-k blocks from one bulk draw."""
    arr = 0.5 * rng.uniform(-1.0, 1.0, size=(n, k, k))
    if base == "complex":
        arr = arr + 0.5j * rng.uniform(-1.0, 1.0, size=(n, k, k))
    arr[:, np.arange(k), np.arange(k)] += 2.0
    return [BlockScalar._make(np.array(a)) for a in arr]


def zero_scalar(field: str, *, block_k: int = 2, block_base: str = "real"):
    if field == "real":
        return 0.0
    if field == "complex":
        return complex(0.0)
    if field == "quaternion":
        return Quaternion(0.0, 0.0, 0.0, 0.0)
    if field == "block":
        return BlockScalar.zeros(block_k, block_base)
    raise ValueError(f"unknown field {field!r}")


def singular_nonzero_block(k: int, base: str = "real") -> BlockScalar:
    """A nonzero block with no inverse (rank one, needs k >= 2)."""
    if k < 2:
        raise ValueError("a nonzero 1x1 block is always invertible")
    if base == "quaternion":
        out = np.empty((k, k), dtype=object)
        out[:] = Quaternion(0.0, 0.0, 0.0, 0.0)
        out[0, 0] = Quaternion(1.0, 0.0, 0.0, 0.0)
        return BlockScalar(out)
    dtype = np.complex128 if base == "complex" else np.float64
    m = np.zeros((k, k), dtype=dtype)
    m[0, 0] = 1.0
    return BlockScalar(m)


def sample_vector(rng: np.random.Generator, n: int, field: str, *,
                  mag_band: bool = False, block_k: int = 2,
                  block_base: str = "real") -> list:
    # bulk draws: benchmark instances reach n in the tens of thousands
    if field == "real":
        if mag_band:
            arr = rng.choice([-1.0, 1.0], size=n) * rng.uniform(0.5, 2.0, size=n)
        else:
            arr = rng.uniform(-1.0, 1.0, size=n)
        return [float(e) for e in arr]
    if field == "complex":
        if mag_band:
            r = rng.uniform(0.5, 2.0, size=n)
            phi = rng.uniform(0.0, 2.0 * np.pi, size=n)
            return [complex(a, b) for a, b in zip(r * np.cos(phi), r * np.sin(phi))]
        arr = rng.uniform(-1.0, 1.0, size=(n, 2))
        return [complex(a, b) for a, b in arr]
    if field == "quaternion":
        if mag_band:
            w = rng.normal(size=(n, 4))
            w = w / np.linalg.norm(w, axis=1)[:, None] * rng.uniform(0.5, 2.0, size=(n, 1))
        else:
            w = rng.uniform(-1.0, 1.0, size=(n, 4))
        return [Quaternion(r[0], r[1], r[2], r[3]) for r in w]
    if block_base != "quaternion":
        return _block_batch(rng, n, block_k, block_base)
    return [sample_scalar(rng, field, mag_band=mag_band, block_k=block_k,
                          block_base=block_base) for _ in range(n)]


def sample_arrow(rng: np.random.Generator, n: int, field: str, *,
                 tip: int | None = None, zero_at: int | None = None,
                 mag_band: bool = False, conditioned: bool = False,
                 block_k: int = 2, block_base: str = "real") -> ArrowMatrix:
    """Random arrowhead of size n; zero_at plants a zero at that shaft index.

    conditioned=True keeps the instance safely invertible: banded diagonal,
    shaft vectors shrunk by 0.3/sqrt(n), and a dominant tip entry, so the
    determinant denominator stays bounded away from zero.
    """
    kw = dict(block_k=block_k, block_base=block_base)
    band = mag_band or conditioned
    diag = sample_vector(rng, n - 1, field, mag_band=band, **kw)
    u = sample_vector(rng, n - 1, field, mag_band=band, **kw)
    v = sample_vector(rng, n - 1, field, mag_band=band, **kw)
    alpha = sample_scalar(rng, field, mag_band=band, **kw)
    if conditioned:
        scale = 0.3 / np.sqrt(n)
        u = [scale * e for e in u]
        v = [scale * e for e in v]
        alpha = alpha + 3.0 * one_like(alpha)
    if zero_at is not None:
        diag[zero_at] = zero_scalar(field, block_k=block_k, block_base=block_base)
    if tip is None:
        tip = int(rng.integers(1, n + 1))
    return ArrowMatrix(diag, u, v, alpha, tip=tip)


def sample_dpr1(rng: np.random.Generator, n: int, field: str, *,
                zero_at: int | None = None, mag_band: bool = False,
                conditioned: bool = False, block_k: int = 2,
                block_base: str = "real") -> DPR1Matrix:
    """Random DPR1 matrix of size n; zero_at plants a zero diagonal entry.

    conditioned=True bounds 1 + (y* Delta^{-1} x) rho away from zero by
    shrinking x, y, and rho.
    """
    kw = dict(block_k=block_k, block_base=block_base)
    band = mag_band or conditioned
    diag = sample_vector(rng, n, field, mag_band=band, **kw)
    x = sample_vector(rng, n, field, mag_band=band, **kw)
    y = sample_vector(rng, n, field, mag_band=band, **kw)
    rho = sample_scalar(rng, field, mag_band=band, **kw)
    if conditioned:
        scale = 0.3 / np.sqrt(n)
        x = [scale * e for e in x]
        y = [scale * e for e in y]
        rho = 0.25 * rho
    if zero_at is not None:
        diag[zero_at] = zero_scalar(field, block_k=block_k, block_base=block_base)
    return DPR1Matrix(diag, x, y, rho)
