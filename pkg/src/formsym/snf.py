"""Smith normal form with unimodular witnesses, plus the lattice utilities
built on it (kernel bases, exact linear solves).

Two interchangeable kernels diagonalize the matrix:

* ``_snf_core`` — compiled (Cython) int64 kernel with overflow guards;
* ``_snf_py``   — pure-Python arbitrary-precision kernel.

The compiled kernel is selected at import when available and an input fits
int64; any overflow falls back to the pure kernel transparently. Set
``FORMSYM_PURE_SNF=1`` to force the pure kernel.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import _snf_py
from .intmat import IntMatrix

try:  # compiled kernel is optional
    from . import _snf_core
except ImportError:  # pragma: no cover - depends on build environment
    _snf_core = None

if os.environ.get("FORMSYM_PURE_SNF"):
    _snf_core = None

# inputs beyond this magnitude go straight to the pure kernel
_INT64_SAFE = 2**62


def kernel_name() -> str:
    """Which reduction kernel new calls will try first."""
    return "compiled" if _snf_core is not None else "pure"


@dataclass(frozen=True)
class SNFResult:
    """left @ matrix @ right == diag, with all four witnesses unimodular."""

    matrix: IntMatrix
    left: IntMatrix
    left_inv: IntMatrix
    right: IntMatrix
    right_inv: IntMatrix
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    def diagonal_matrix(self) -> IntMatrix:
        return IntMatrix.diagonal(self.diagonal, self.matrix.rows, self.matrix.cols)

    def diag_at(self, j: int) -> int:
        """Diagonal entry for column j, zero past the stored diagonal."""
        return self.diagonal[j] if j < len(self.diagonal) else 0


def _run_compiled(data, m, n):
    import numpy as np

    a = np.array(data, dtype=np.int64).reshape(m, n)
    L = np.eye(m, dtype=np.int64)
    Li = np.eye(m, dtype=np.int64)
    R = np.eye(n, dtype=np.int64)
    Ri = np.eye(n, dtype=np.int64)
    _snf_core.reduce_in_place(a, L, Li, R, Ri)
    return (
        a.tolist(),
        L.tolist(),
        Li.tolist(),
        R.tolist(),
        Ri.tolist(),
    )


def smith_decomposition(matrix: IntMatrix) -> SNFResult:
    """Full Smith decomposition with witnesses and their inverses."""
    m, n = matrix.rows, matrix.cols
    done = False
    if _snf_core is not None and matrix.max_abs() < _INT64_SAFE:
        try:
            a, L, Li, R, Ri = _run_compiled(matrix.data, m, n)
            done = True
        except OverflowError:
            done = False
    if not done:
        a = [list(row) for row in matrix.data]
        L, Li, R, Ri = _snf_py.reduce_in_place(a, m, n)
    diag = tuple(a[i][i] for i in range(min(m, n)))
    return SNFResult(
        matrix=matrix,
        left=IntMatrix(L, cols=m),
        left_inv=IntMatrix(Li, cols=m),
        right=IntMatrix(R, cols=n),
        right_inv=IntMatrix(Ri, cols=n),
        diagonal=diag,
    )


def smith_normal_form(matrix: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """(left, diagonal, right) with left @ matrix @ right == diagonal."""
    res = smith_decomposition(matrix)
    return res.left, res.diagonal_matrix(), res.right


def verify_decomposition(res: SNFResult) -> None:
    """Assert every SNF postcondition exactly; raises AssertionError."""
    m, n = res.matrix.rows, res.matrix.cols
    product = res.left @ res.matrix @ res.right
    assert product == res.diagonal_matrix(), "L @ A @ R is not the stored diagonal"
    assert res.left @ res.left_inv == IntMatrix.identity(m), "left inverse wrong"
    assert res.right @ res.right_inv == IntMatrix.identity(n), "right inverse wrong"
    assert res.left.det() in (1, -1), "left witness not unimodular"
    assert res.right.det() in (1, -1), "right witness not unimodular"
    diag = res.diagonal
    for d in diag:
        assert d >= 0
    for a, b in zip(diag, diag[1:]):
        if b:
            assert a != 0 and b % a == 0, f"divisibility chain broken: {diag}"


def kernel_basis(matrix: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel lattice, as columns.

    Columns of the right witness whose diagonal entry vanishes form a basis
    of ker(A) as a saturated sublattice of Z^cols.
    """
    res = smith_decomposition(matrix)
    cols = [res.right.col_list(j) for j in range(matrix.cols) if res.diag_at(j) == 0]
    return IntMatrix.from_columns(cols, matrix.cols)


def solve(matrix: IntMatrix, rhs: IntMatrix) -> IntMatrix | None:
    """One integer solution X of A @ X = B, or None if none exists.

    Solves via the diagonalization: A X = B iff D (R^-1 X) = L B.
    """
    if rhs.rows != matrix.rows:
        raise ValueError("right-hand side has wrong height")
    res = smith_decomposition(matrix)
    lb = res.left @ rhs
    y = IntMatrix.zeros(matrix.cols, rhs.cols)
    ndiag = len(res.diagonal)
    for i in range(matrix.rows):
        d = res.diagonal[i] if i < ndiag else 0
        for j in range(rhs.cols):
            v = lb.data[i][j]
            if d == 0:
                if v != 0:
                    return None
            else:
                if v % d:
                    return None
                if i < matrix.cols:
                    y.data[i][j] = v // d
    return res.right @ y


def solve_vector(matrix: IntMatrix, vec: list[int]) -> list[int] | None:
    out = solve(matrix, IntMatrix.column(vec))
    if out is None:
        return None
    return out.col_list(0)
