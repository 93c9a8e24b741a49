"""Linear-time operations on arrowhead and diagonal-plus-rank-one matrices.

Matrix-vector products, determinants, and inverses run in O(n) scalar
operations, with scalars drawn from the reals, complexes, quaternions, or
square blocks over any of those. Inverses come back in structured form:
inverting across the two families swaps them when the diagonal is free of
zeros, and keeps the family (moving the arrow tip onto the zero's position)
when exactly one diagonal entry vanishes.
"""

from .blockscalar import BlockScalar
from .errors import (ArrowDPR1Error, DimensionError, MatrixFileError,
                     SingularMatrixError, SingularScalarError,
                     StructureNotRepresentableError)
from .fastops import (DetBranch, DetResult, arrow_det, arrow_inv,
                      arrow_matvec, block_det_reduce, dpr1_det, dpr1_inv,
                      dpr1_matvec)
from .io import load_matrix, load_vector, serialize_matrix, serialize_vector
from .quaternion import Quaternion
from .scalars import conj, inv, is_zero, mag
from .structured import ArrowMatrix, DPR1Matrix, StructuredInverse, to_dense

__version__ = "0.1.0"

__all__ = [
    "ArrowDPR1Error", "ArrowMatrix", "BlockScalar", "DPR1Matrix",
    "DetBranch", "DetResult", "DimensionError", "MatrixFileError",
    "Quaternion", "SingularMatrixError", "SingularScalarError",
    "StructureNotRepresentableError", "StructuredInverse",
    "arrow_det", "arrow_inv", "arrow_matvec", "block_det_reduce",
    "conj", "dpr1_det", "dpr1_inv", "dpr1_matvec", "inv", "is_zero",
    "load_matrix", "load_vector", "mag", "serialize_matrix",
    "serialize_vector", "to_dense", "__version__",
]
