"""Exception types shared across the package."""


class ArrowDPR1Error(Exception):
    """Base class for errors raised by this package."""


class DimensionError(ArrowDPR1Error, ValueError):
    """Container shapes are inconsistent (lengths, tip position, vector size)."""


class MatrixFileError(ArrowDPR1Error, ValueError):
    """A matrix or vector file does not conform to the expected schema."""


class SingularScalarError(ArrowDPR1Error, ArithmeticError):
    """A scalar (number, quaternion, or block) has no inverse."""


class SingularMatrixError(ArrowDPR1Error, ArithmeticError):
    """The matrix is singular; no inverse exists."""


class StructureNotRepresentableError(ArrowDPR1Error, ArithmeticError):
    """The matrix may be invertible, but its inverse is not expressible in the
    arrowhead / diagonal-plus-rank-one form produced by the closed formulas.

    This can only happen for block entries: a nonzero block can still be a
    singular matrix, and the formulas require inverting individual entries.
    """
