"""Generic scalar operations.

Every entry type the structured kernels accept (float, complex, Quaternion,
BlockScalar) supports ``+``, ``-``, unary ``-`` and ``*`` through operators.
The remaining operations needed by the closed formulas are dispatched here:

    conj(x)         conjugate (conjugate transpose for blocks)
    inv(x, tol)     multiplicative inverse, SingularScalarError if |x| <= tol
    mag(x)          nonnegative magnitude (abs / modulus / quaternion norm /
                    Frobenius norm)
    is_zero(x, tol) magnitude test against tol
    one_like(x)     multiplicative identity of the same kind as x
    zero_like(x)    additive identity of the same kind as x

Multiplication is not assumed commutative anywhere in the package; formulas
spell out left/right factors explicitly and never divide.
"""

from __future__ import annotations

from functools import singledispatch

from .errors import SingularScalarError


@singledispatch
def conj(x):
    raise TypeError(f"no conjugation defined for {type(x).__name__}")


@singledispatch
def inv(x, tol: float = 0.0):
    raise TypeError(f"no inverse defined for {type(x).__name__}")


@singledispatch
def mag(x) -> float:
    raise TypeError(f"no magnitude defined for {type(x).__name__}")


@singledispatch
def one_like(x):
    raise TypeError(f"no multiplicative identity defined for {type(x).__name__}")


@singledispatch
def zero_like(x):
    raise TypeError(f"no additive identity defined for {type(x).__name__}")


def is_zero(x, tol: float = 0.0) -> bool:
    return mag(x) <= tol


@conj.register(float)
@conj.register(int)
def _(x):
    return float(x)


@conj.register(complex)
def _(x):
    return x.conjugate()


@inv.register(float)
@inv.register(int)
def _(x, tol: float = 0.0):
    if abs(x) <= tol:
        raise SingularScalarError(f"real scalar {x!r} is not invertible")
    return 1.0 / x


@inv.register(complex)
def _(x, tol: float = 0.0):
    if abs(x) <= tol:
        raise SingularScalarError(f"complex scalar {x!r} is not invertible")
    return 1.0 / x


@mag.register(float)
@mag.register(int)
def _(x) -> float:
    return abs(float(x))


@mag.register(complex)
def _(x) -> float:
    return abs(x)


@one_like.register(float)
@one_like.register(int)
def _(x):
    return 1.0


@one_like.register(complex)
def _(x):
    return complex(1.0)


@zero_like.register(float)
@zero_like.register(int)
def _(x):
    return 0.0


@zero_like.register(complex)
def _(x):
    return complex(0.0)


def field_name(x) -> str:
    """Short name of the scalar kind ('real', 'complex', 'quaternion', 'block')."""
    if isinstance(x, CountingScalar):
        return field_name(x.value)
    # walk the MRO so numpy scalar subclasses of float/complex resolve too
    for cls in type(x).__mro__:
        name = _FIELD_NAMES.get(cls)
        if name is not None:
            return name
    raise TypeError(f"unknown scalar type {type(x).__name__}")


_FIELD_NAMES: dict[type, str] = {int: "real", float: "real", complex: "complex"}


def _register_field(cls: type, name: str) -> None:
    _FIELD_NAMES[cls] = name


class CountingScalar:
    """Wrapper that counts scalar operations while delegating to the wrapped value.

    The counter is class-level: wrap every entry of an instance, run an
    operation, and ``CountingScalar.count()`` gives the total number of scalar
    additions, multiplications, conjugations, inversions and magnitude tests
    it performed.
    """

    __slots__ = ("value",)

    ops = 0

    def __init__(self, value):
        self.value = value

    @classmethod
    def reset(cls) -> None:
        cls.ops = 0

    @classmethod
    def count(cls) -> int:
        return cls.ops

    def __add__(self, other):
        if not isinstance(other, CountingScalar):
            return NotImplemented
        CountingScalar.ops += 1
        return CountingScalar(self.value + other.value)

    def __sub__(self, other):
        if not isinstance(other, CountingScalar):
            return NotImplemented
        CountingScalar.ops += 1
        return CountingScalar(self.value - other.value)

    def __mul__(self, other):
        if not isinstance(other, CountingScalar):
            return NotImplemented
        CountingScalar.ops += 1
        return CountingScalar(self.value * other.value)

    def __neg__(self):
        CountingScalar.ops += 1
        return CountingScalar(-self.value)

    def __repr__(self):
        return f"CountingScalar({self.value!r})"


@conj.register(CountingScalar)
def _(x):
    CountingScalar.ops += 1
    return CountingScalar(conj(x.value))


@inv.register(CountingScalar)
def _(x, tol: float = 0.0):
    CountingScalar.ops += 1
    return CountingScalar(inv(x.value, tol))


@mag.register(CountingScalar)
def _(x) -> float:
    CountingScalar.ops += 1
    return mag(x.value)


@one_like.register(CountingScalar)
def _(x):
    return CountingScalar(one_like(x.value))


@zero_like.register(CountingScalar)
def _(x):
    return CountingScalar(zero_like(x.value))
