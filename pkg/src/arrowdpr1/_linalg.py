"""Dense Gauss-Jordan elimination over any scalar satisfying the contract.

Row operations only ever multiply from the left, so the routine is valid for
noncommutative entries (quaternions, blocks). Pivots are chosen by magnitude.
"""

from __future__ import annotations

from .errors import SingularMatrixError
from .scalars import inv, mag, one_like, zero_like


def gauss_jordan_inv(rows: list[list], tol: float = 0.0) -> list[list]:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    one = one_like(rows[0][0])
    zero = zero_like(rows[0][0])
    # augmented [A | I], eliminated in place
    work = [list(r) + [one if i == j else zero for j in range(n)]
            for i, r in enumerate(rows)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: mag(work[r][col]))
        if mag(work[piv][col]) <= tol:
            raise SingularMatrixError(f"no usable pivot in column {col}")
        work[col], work[piv] = work[piv], work[col]
        p_inv = inv(work[col][col], tol)
        work[col] = [p_inv * e for e in work[col]]
        for r in range(n):
            if r == col:
                continue
            f = work[r][col]
            if mag(f) == 0.0:
                continue
            row = work[r]
            prow = work[col]
            work[r] = [row[j] - f * prow[j] for j in range(2 * n)]
    return [row[n:] for row in work]
