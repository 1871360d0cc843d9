"""Exact dense linear algebra for the interpolation method.

Determinants use Bareiss fraction-free elimination on integer matrices; a
rational matrix has each row cleared of denominators first, and the scale
factors are divided back out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .exact import RationalLike, as_rational


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(as_rational(x) for row in rows for x in row))

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Fraction]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def with_column(self, j: int, column: Sequence[RationalLike]) -> "Matrix":
        rows = self.to_rows()
        for i, v in enumerate(column):
            rows[i][j] = as_rational(v)
        return Matrix.from_rows(rows)

    def matvec(self, v: Sequence[RationalLike]) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.to_rows()]


def vandermonde(d: int) -> Matrix:
    """(d+1)x(d+1) matrix with entry ``i**j`` for 1-indexed ``i, j``."""
    size = d + 1
    return Matrix.from_rows([[i**j for j in range(1, size + 1)] for i in range(1, size + 1)])


def _integer_rows(m: Matrix) -> tuple[list[list[int]], int]:
    """Scale each row to integers; returns the rows and the product of scale factors."""
    rows, scale = [], 1
    for row in m.to_rows():
        s = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * s) for x in row])
        scale *= s
    return rows, scale


def _bareiss(a: list[list[int]], ncols: int | None = None) -> int:
    """In-place Bareiss elimination on the leading square block; returns its determinant.

    Extra columns (an augmented right-hand side) are carried along.
    """
    n = len(a)
    width = len(a[0]) if ncols is None else ncols
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, width):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def determinant(m: Matrix) -> Fraction:
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    if m.rows == 0:
        return Fraction(1)
    rows, scale = _integer_rows(m)
    return Fraction(_bareiss(rows), scale)


def _check_system(m: Matrix, b: Sequence[RationalLike]) -> None:
    if not m.is_square:
        raise ValueError("coefficient matrix must be square")
    if len(b) != m.rows:
        raise ValueError("dimension mismatch: rhs length != rows")


def cramer_solve(m: Matrix, b: Sequence[RationalLike]) -> list[Fraction]:
    """Solve ``m x = b`` with Cramer's rule: ``x_i = det(m_i) / det(m)``."""
    _check_system(m, b)
    det = determinant(m)
    if det == 0:
        raise SingularMatrixError("singular system")
    return [determinant(m.with_column(i, b)) / det for i in range(m.cols)]


def gauss_solve(m: Matrix, b: Sequence[RationalLike]) -> list[Fraction]:
    """Fraction-free elimination on ``[m | b]`` followed by back-substitution."""
    _check_system(m, b)
    size = m.rows
    aug = Matrix.from_rows([row + [as_rational(v)] for row, v in zip(m.to_rows(), b)])
    rows, _ = _integer_rows(aug)
    # Row scaling leaves the solution unchanged.
    if size and _bareiss(rows, size + 1) == 0:
        raise SingularMatrixError("singular system")
    x = [Fraction(0)] * size
    for i in reversed(range(size)):
        acc = Fraction(rows[i][size])
        for j in range(i + 1, size):
            acc -= rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    return x
