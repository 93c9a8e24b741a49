"""Structured matrix containers.

ArrowMatrix holds an arrowhead matrix: diagonal everywhere except one full
row and one full column crossing at the tip. The tip may sit at any position
``tip`` (1-based); ``diag``, ``u`` and ``v`` are indexed by shaft position,
i.e. with the tip row/column deleted. For tip=n:

    [ diag(d)    u ]
    [ v*     alpha ]

DPR1Matrix holds diag(delta) + x * rho * y*, a diagonal plus a rank-one
update with an inner scalar rho.

The row vector is stored unconjugated in both cases: the dense matrix
carries conj(v_s) / conj(y_j), not v_s / y_j.

Entries may be float, complex, Quaternion, or BlockScalar; one instance uses
one kind throughout. Containers are immutable and validated on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DimensionError
from .scalars import conj, zero_like


def shaft_to_matrix(tip0: int, s: int) -> int:
    """Matrix position (0-based) of shaft index s when the tip sits at tip0."""
    return s if s < tip0 else s + 1


def matrix_to_shaft(tip0: int, m: int) -> int:
    """Shaft index of matrix position m (0-based); m must not be the tip."""
    return m if m < tip0 else m - 1


@dataclass(frozen=True)
class ArrowMatrix:
    diag: tuple
    u: tuple
    v: tuple
    alpha: object
    tip: int = None

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(self.diag))
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        n = len(self.diag) + 1
        if self.tip is None:
            object.__setattr__(self, "tip", n)
        if len(self.u) != len(self.diag) or len(self.v) != len(self.diag):
            raise DimensionError(
                f"u and v must match diag length {len(self.diag)}, "
                f"got {len(self.u)} and {len(self.v)}")
        if not isinstance(self.tip, int) or not 1 <= self.tip <= n:
            raise DimensionError(f"tip must be an integer in 1..{n}, got {self.tip!r}")

    @property
    def n(self) -> int:
        return len(self.diag) + 1

    @property
    def tip0(self) -> int:
        """0-based tip position; the only place the 1-based convention is mapped."""
        return self.tip - 1


@dataclass(frozen=True)
class DPR1Matrix:
    diag: tuple
    x: tuple
    y: tuple
    rho: object

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(self.diag))
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "y", tuple(self.y))
        if len(self.diag) == 0:
            raise DimensionError("diagonal must not be empty")
        if len(self.x) != len(self.diag) or len(self.y) != len(self.diag):
            raise DimensionError(
                f"x and y must match diag length {len(self.diag)}, "
                f"got {len(self.x)} and {len(self.y)}")

    @property
    def n(self) -> int:
        return len(self.diag)


# inverses swap structure when a diagonal entry is zero, so either shape
# can come back from the inverse routines
StructuredInverse = Union[ArrowMatrix, DPR1Matrix]


def arrow_to_dense(a: ArrowMatrix) -> list[list]:
    n, t = a.n, a.tip0
    zero = zero_like(a.alpha)
    dense = [[zero for _ in range(n)] for _ in range(n)]
    for s in range(n - 1):
        m = shaft_to_matrix(t, s)
        dense[m][m] = a.diag[s]
        dense[m][t] = a.u[s]
        dense[t][m] = conj(a.v[s])
    dense[t][t] = a.alpha
    return dense


def dpr1_to_dense(a: DPR1Matrix) -> list[list]:
    n = a.n
    dense = []
    for i in range(n):
        xi_rho = a.x[i] * a.rho
        row = [xi_rho * conj(a.y[j]) for j in range(n)]
        row[i] = a.diag[i] + row[i]
        dense.append(row)
    return dense


def to_dense(m) -> list[list]:
    if isinstance(m, ArrowMatrix):
        return arrow_to_dense(m)
    if isinstance(m, DPR1Matrix):
        return dpr1_to_dense(m)
    raise TypeError(f"expected ArrowMatrix or DPR1Matrix, got {type(m).__name__}")


def validate(m) -> None:
    """Re-run the container invariant checks (constructors already enforce them)."""
    if isinstance(m, ArrowMatrix):
        ArrowMatrix(m.diag, m.u, m.v, m.alpha, tip=m.tip)
    elif isinstance(m, DPR1Matrix):
        DPR1Matrix(m.diag, m.x, m.y, m.rho)
    else:
        raise TypeError(f"expected ArrowMatrix or DPR1Matrix, got {type(m).__name__}")
