"""
Integer Lattice Tools

Exact integer linear algebra on small dense matrices (lists of rows), on top
of sympy's normal forms over ZZ:

* IntegerKernel: a saturated basis of {x in Z^n : Mx = 0}. The rational
  nullspace is cleared of denominators and put in Smith form S K T = D;
  the first k columns of S^-1 span the saturation, and the first k rows
  of S give coordinates.
* diagonalize: S A T = D in Smith normal form, invariant factors dividing
  each other; enough to read off rank, torsion and free coordinates of
  Z^h / col(A).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from sympy import ZZ, Matrix, igcd, ilcm
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

IntMatrix = list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_vec(matrix: Sequence[Sequence[int]], vector: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, vector)) for row in matrix]


def _is_zero(rows: Sequence[Sequence[int]]) -> bool:
    return all(x == 0 for row in rows for x in row)


def _domain_matrix(rows: Sequence[Sequence[int]], nrows: int, ncols: int) -> DomainMatrix:
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (nrows, ncols), ZZ)


def _int_rows(matrix: Matrix) -> IntMatrix:
    return [[int(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]


def _smith(
    rows: Sequence[Sequence[int]], nrows: int, ncols: int
) -> tuple[tuple[int, ...], IntMatrix, IntMatrix]:
    """Invariant factors (nonzero, in order) with S and S^-1 of S A T = D."""
    smith, s, _ = smith_normal_decomp(_domain_matrix(rows, nrows, ncols))
    d = smith.to_Matrix()
    diagonal = tuple(int(d[i, i]) for i in range(min(nrows, ncols)) if d[i, i] != 0)
    s_matrix = s.to_Matrix()
    return diagonal, _int_rows(s_matrix), _int_rows(s_matrix.inv())


@dataclass(frozen=True)
class IntegerKernel:
    """
    Saturated integer kernel of an m x n matrix.

    Attributes:
        ambient: n
        basis: kernel basis vectors in Z^n
        inverse_rows: rows of S belonging to the kernel block; coordinates(x)
            applies them to x
    """

    ambient: int
    basis: tuple[tuple[int, ...], ...]
    inverse_rows: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, vector: Sequence[int]) -> list[int]:
        """Coordinates of a kernel vector in the kernel basis."""
        coords = mat_vec(self.inverse_rows, vector)
        rebuilt = [sum(c * b[i] for c, b in zip(coords, self.basis)) for i in range(self.ambient)]
        if rebuilt != list(vector):
            raise ValueError(f"{list(vector)} is not in the kernel lattice")
        return coords


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> IntegerKernel:
    """
    Saturated kernel basis of the integer matrix given by rows.

    Example:
        >>> integer_kernel([[2, 0]], 2).rank
        1
    """
    if not rows or _is_zero(rows):
        unit = tuple(tuple(r) for r in identity(ncols))
        return IntegerKernel(ncols, unit, unit)

    rational = Matrix([list(r) for r in rows]).nullspace()
    if not rational:
        return IntegerKernel(ncols, (), ())

    columns = []
    for vector in rational:
        scale = reduce(ilcm, (x.q for x in vector), 1)
        columns.append([int(x * scale) for x in vector])
    k = len(columns)
    spanning = [[columns[c][i] for c in range(k)] for i in range(ncols)]
    _, s, s_inverse = _smith(spanning, ncols, k)

    basis = tuple(tuple(s_inverse[i][c] for i in range(ncols)) for c in range(k))
    inverse_rows = tuple(tuple(s[c]) for c in range(k))
    return IntegerKernel(ncols, basis, inverse_rows)


@dataclass(frozen=True)
class Diagonalization:
    """S A T = D in Smith form; diagonal holds the nonzero invariant factors in order."""

    u: tuple[tuple[int, ...], ...]
    u_inverse: tuple[tuple[int, ...], ...]
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def diagonalize(matrix: Sequence[Sequence[int]], nrows: int, ncols: int) -> Diagonalization:
    """
    Smith normal form of an integer matrix.

    Only the row transform S (and its inverse) is kept; the column
    transform is not needed to read the quotient Z^nrows / col(A).
    """
    if nrows == 0 or ncols == 0 or _is_zero(matrix):
        unit = tuple(tuple(r) for r in identity(nrows))
        return Diagonalization(u=unit, u_inverse=unit, diagonal=())
    diagonal, s, s_inverse = _smith(matrix, nrows, ncols)
    return Diagonalization(
        u=tuple(tuple(r) for r in s),
        u_inverse=tuple(tuple(r) for r in s_inverse),
        diagonal=diagonal,
    )


def primitive(vector: Sequence[int]) -> list[int]:
    """Divide by the gcd of the entries (zero vector unchanged)."""
    g = int(reduce(igcd, vector, 0))
    if g == 0:
        return list(vector)
    return [x // g for x in vector]


def matrix_rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    if not rows:
        return 0
    return Matrix([list(r) for r in rows]).rank()


__all__ = [
    "Diagonalization",
    "IntegerKernel",
    "diagonalize",
    "identity",
    "integer_kernel",
    "mat_vec",
    "matrix_rank",
    "primitive",
]
