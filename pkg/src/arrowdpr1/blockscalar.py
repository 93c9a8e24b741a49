"""Square blocks treated as single scalars.

A BlockScalar is a k-by-k matrix over floats, complexes, or Quaternions that
participates in the structured formulas as one element. Conjugation is the
conjugate transpose, magnitude is the Frobenius norm, and the inverse is the
matrix inverse. Block products do not commute even when the base scalars do,
and a nonzero block can still be singular; both facts drive the error
handling in the fast operations.
"""

from __future__ import annotations

import math
import numbers

import numpy as np

from ._linalg import gauss_jordan_inv
from .errors import DimensionError, SingularMatrixError, SingularScalarError
from .quaternion import ONE as _QONE, Quaternion
from . import scalars


# the wrapper and its array are both immutable, so constants can be shared
_CONSTANT_CACHE: dict = {}


class BlockScalar:
    __slots__ = ("entries",)

    def __init__(self, entries):
        # always copy: the stored array is frozen and must not alias the input
        arr = np.array(entries)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise DimensionError(f"block must be square and nonempty, got shape {arr.shape}")
        if arr.dtype == object:
            if not all(isinstance(e, Quaternion) for e in arr.flat):
                raise TypeError("object blocks must contain Quaternion entries")
        elif np.issubdtype(arr.dtype, np.complexfloating):
            arr = arr.astype(np.complex128, copy=False)
        elif np.issubdtype(arr.dtype, np.floating) or np.issubdtype(arr.dtype, np.integer):
            arr = arr.astype(np.float64, copy=False)
        else:
            raise TypeError(f"unsupported block dtype {arr.dtype}")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def _make(cls, arr: np.ndarray) -> "BlockScalar":
        # internal: arr comes out of an operation on validated entries
        out = object.__new__(cls)
        arr.setflags(write=False)
        object.__setattr__(out, "entries", arr)
        return out

    def __setattr__(self, name, value):
        raise AttributeError("BlockScalar is immutable")

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    @property
    def base_field(self) -> str:
        if self.entries.dtype == object:
            return "quaternion"
        if np.issubdtype(self.entries.dtype, np.complexfloating):
            return "complex"
        return "real"

    def _check_compatible(self, other: "BlockScalar") -> None:
        if self.k != other.k:
            raise DimensionError(f"block sizes differ: {self.k} vs {other.k}")
        if (self.entries.dtype == object) != (other.entries.dtype == object):
            raise TypeError("cannot mix quaternion blocks with numeric blocks")

    def __add__(self, other):
        if not isinstance(other, BlockScalar):
            return NotImplemented
        self._check_compatible(other)
        return BlockScalar._make(self.entries + other.entries)

    def __sub__(self, other):
        if not isinstance(other, BlockScalar):
            return NotImplemented
        self._check_compatible(other)
        return BlockScalar._make(self.entries - other.entries)

    def __neg__(self):
        return BlockScalar._make(-self.entries)

    def __mul__(self, other):
        if isinstance(other, BlockScalar):
            self._check_compatible(other)
            a, b = self.entries, other.entries
            if a.dtype == object:
                # spelled-out product keeps left/right factor order exact
                k = self.k
                out = np.empty((k, k), dtype=object)
                for i in range(k):
                    for j in range(k):
                        acc = a[i, 0] * b[0, j]
                        for l in range(1, k):
                            acc = acc + a[i, l] * b[l, j]
                        out[i, j] = acc
                return BlockScalar._make(out)
            return BlockScalar._make(a @ b)
        if isinstance(other, numbers.Real):
            return BlockScalar._make(self.entries * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return BlockScalar._make(float(other) * self.entries)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, BlockScalar):
            return NotImplemented
        return self.k == other.k and bool(np.all(self.entries == other.entries))

    __hash__ = None

    def conjugate(self) -> "BlockScalar":
        if self.entries.dtype == object:
            out = np.empty((self.k, self.k), dtype=object)
            for i in range(self.k):
                for j in range(self.k):
                    out[j, i] = self.entries[i, j].conjugate()
            return BlockScalar(out)
        return BlockScalar(self.entries.conj().T)

    def magnitude(self) -> float:
        if self.entries.dtype == object:
            return math.sqrt(sum(e.norm_sq() for e in self.entries.flat))
        return float(np.linalg.norm(self.entries))

    def inverse(self, tol: float = 0.0) -> "BlockScalar":
        rows = [[self.entries[i, j] for j in range(self.k)] for i in range(self.k)]
        try:
            inv_rows = gauss_jordan_inv(rows, tol)
        except SingularMatrixError as e:
            raise SingularScalarError(f"block of size {self.k} is not invertible") from e
        if self.entries.dtype == object:
            out = np.empty((self.k, self.k), dtype=object)
            for i in range(self.k):
                for j in range(self.k):
                    out[i, j] = inv_rows[i][j]
            return BlockScalar(out)
        return BlockScalar(np.asarray(inv_rows))

    @classmethod
    def identity(cls, k: int, base_field: str = "real") -> "BlockScalar":
        cached = _CONSTANT_CACHE.get(("one", k, base_field))
        if cached is not None:
            return cached
        if base_field == "quaternion":
            out = np.empty((k, k), dtype=object)
            for i in range(k):
                for j in range(k):
                    out[i, j] = _QONE if i == j else Quaternion(0, 0, 0, 0)
            block = cls(out)
        else:
            dtype = np.complex128 if base_field == "complex" else np.float64
            block = cls(np.eye(k, dtype=dtype))
        _CONSTANT_CACHE[("one", k, base_field)] = block
        return block

    @classmethod
    def zeros(cls, k: int, base_field: str = "real") -> "BlockScalar":
        cached = _CONSTANT_CACHE.get(("zero", k, base_field))
        if cached is not None:
            return cached
        if base_field == "quaternion":
            out = np.empty((k, k), dtype=object)
            out[:] = Quaternion(0, 0, 0, 0)
            block = cls(out)
        else:
            dtype = np.complex128 if base_field == "complex" else np.float64
            block = cls(np.zeros((k, k), dtype=dtype))
        _CONSTANT_CACHE[("zero", k, base_field)] = block
        return block

    def __repr__(self):
        return f"BlockScalar({self.entries.tolist()!r})"


@scalars.conj.register(BlockScalar)
def _(x):
    return x.conjugate()


@scalars.inv.register(BlockScalar)
def _(x, tol: float = 0.0):
    return x.inverse(tol)


@scalars.mag.register(BlockScalar)
def _(x) -> float:
    return x.magnitude()


@scalars.one_like.register(BlockScalar)
def _(x):
    return BlockScalar.identity(x.k, x.base_field)


@scalars.zero_like.register(BlockScalar)
def _(x):
    return BlockScalar.zeros(x.k, x.base_field)


scalars._register_field(BlockScalar, "block")
