"""Quaternions with float components.

A quaternion is a + b*i + c*j + d*k with the usual Hamilton product:

    i*i = j*j = k*k = -1
    i*j = k,  j*k = i,  k*i = j
    j*i = -k, k*j = -i, i*k = -j

Multiplication is associative but not commutative, which is the whole reason
the structured kernels in this package keep strict factor order.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

import numpy as np

from .errors import SingularScalarError
from . import scalars


@dataclass(frozen=True, slots=True)
class Quaternion:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        # skip coercion on the hot path: arithmetic always passes floats
        if type(self.a) is not float:
            object.__setattr__(self, "a", float(self.a))
        if type(self.b) is not float:
            object.__setattr__(self, "b", float(self.b))
        if type(self.c) is not float:
            object.__setattr__(self, "c", float(self.c))
        if type(self.d) is not float:
            object.__setattr__(self, "d", float(self.d))

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.a + other.a, self.b + other.b,
                          self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.a - other.a, self.b - other.b,
                          self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            pa, pb, pc, pd = self.a, self.b, self.c, self.d
            qa, qb, qc, qd = other.a, other.b, other.c, other.d
            return Quaternion(
                pa * qa - pb * qb - pc * qc - pd * qd,
                pa * qb + pb * qa + pc * qd - pd * qc,
                pa * qc - pb * qd + pc * qa + pd * qb,
                pa * qd + pb * qc - pc * qb + pd * qa,
            )
        if isinstance(other, numbers.Real):
            # reals commute with everything
            s = float(other)
            return Quaternion(self.a * s, self.b * s, self.c * s, self.d * s)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            s = float(other)
            return Quaternion(s * self.a, s * self.b, s * self.c, s * self.d)
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm_sq(self) -> float:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def __abs__(self) -> float:
        return math.sqrt(self.norm_sq())

    def inverse(self, tol: float = 0.0) -> "Quaternion":
        n2 = self.norm_sq()
        if math.sqrt(n2) <= tol or n2 == 0.0:
            raise SingularScalarError(f"quaternion {self!r} is not invertible")
        return Quaternion(self.a / n2, -self.b / n2, -self.c / n2, -self.d / n2)

    def components(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def embed(q: Quaternion) -> np.ndarray:
    """Represent q = a + b*i + c*j + d*k as a 2x2 complex matrix.

    The map sends 1, i, j, k to a basis of 2x2 complex matrices and turns
    quaternion products into matrix products, so determinants of quaternion
    matrices can be defined through it.
    """
    return np.array(
        [
            [complex(q.a, q.b), complex(q.c, q.d)],
            [complex(-q.c, q.d), complex(q.a, -q.b)],
        ],
        dtype=np.complex128,
    )


@scalars.conj.register(Quaternion)
def _(x):
    return x.conjugate()


@scalars.inv.register(Quaternion)
def _(x, tol: float = 0.0):
    return x.inverse(tol)


@scalars.mag.register(Quaternion)
def _(x) -> float:
    return abs(x)


@scalars.one_like.register(Quaternion)
def _(x):
    return ONE


@scalars.zero_like.register(Quaternion)
def _(x):
    return Quaternion(0.0, 0.0, 0.0, 0.0)


scalars._register_field(Quaternion, "quaternion")
