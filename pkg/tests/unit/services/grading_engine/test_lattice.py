"""Unit tests for integer kernels and diagonalization."""

import pytest

from services.grading_engine import diagonalize, integer_kernel, primitive
from services.grading_engine.lattice import mat_vec, matrix_rank


class TestIntegerKernel:
    """Saturated kernels of integer matrices."""

    def test_kernel_vectors_solve_system(self):
        rows = [[1, 2, -3, 0], [0, 1, 1, -1]]
        kernel = integer_kernel(rows, 4)
        assert kernel.rank == 2
        for vector in kernel.basis:
            assert mat_vec(rows, vector) == [0, 0]

    def test_kernel_is_saturated(self):
        # 2x = 0 over Z has kernel 0 in the first coordinate, not 2Z
        kernel = integer_kernel([[2, 0]], 2)
        assert kernel.basis == ((0, 1),) or kernel.basis == ((0, -1),)

    def test_coordinates_round_trip(self):
        kernel = integer_kernel([[1, 1, 1]], 3)
        vector = (3, -1, -2)
        coords = kernel.coordinates(vector)
        rebuilt = [sum(c * b[i] for c, b in zip(coords, kernel.basis)) for i in range(3)]
        assert rebuilt == list(vector)

    def test_coordinates_outside_kernel(self):
        kernel = integer_kernel([[1, 1]], 2)
        with pytest.raises(ValueError, match="not in the kernel"):
            kernel.coordinates((1, 0))

    def test_rational_kernel_is_cleared(self):
        kernel = integer_kernel([[2, 3]], 2)
        assert kernel.basis in (((3, -2),), ((-3, 2),))

    def test_saturated_against_non_primitive_span(self):
        # x1 + x2 + 2 x3 = 0 has the primitive solution (1, 1, -1)
        kernel = integer_kernel([[1, 1, 2]], 3)
        assert kernel.rank == 2
        assert len(kernel.coordinates((1, 1, -1))) == 2

    def test_full_rank_system(self):
        assert integer_kernel([[1, 0], [0, 1]], 2).rank == 0

    def test_empty_system(self):
        assert integer_kernel([], 3).rank == 3

    def test_matrix_rank(self):
        assert matrix_rank([[1, 2], [2, 4]], 2) == 1


class TestDiagonalize:
    """Unimodular diagonalization."""

    def test_invariant_factors_divide(self):
        # diag(2, 3) has Smith form diag(1, 6), not the non-canonical diag(2, 3)
        diag = diagonalize([[2, 0], [0, 3]], 2, 2)
        assert diag.diagonal == (1, 6)
        assert diag.rank == 2

    def test_divisibility_chain(self):
        diag = diagonalize([[4, 0, 0], [0, 6, 0], [0, 0, 10]], 3, 3)
        assert diag.diagonal == (2, 2, 60)

    def test_row_transform_reduces_columns(self):
        matrix = [[2, 4], [6, 8], [1, 3]]
        diag = diagonalize(matrix, 3, 2)
        assert diag.diagonal == (1, 2)
        for j in range(2):
            column = mat_vec(diag.u, [row[j] for row in matrix])
            assert column[0] % 1 == 0 and column[1] % 2 == 0
            assert column[2] == 0

    def test_zero_matrix(self):
        diag = diagonalize([[0, 0]], 1, 2)
        assert diag.diagonal == ()
        assert diag.u == ((1,),)

    def test_rank_deficient(self):
        diag = diagonalize([[1, -1], [-1, 1]], 2, 2)
        assert diag.diagonal == (1,)

    def test_u_inverse(self):
        diag = diagonalize([[4, 6], [2, 8]], 2, 2)
        product = [
            [sum(diag.u[i][k] * diag.u_inverse[k][j] for k in range(2)) for j in range(2)]
            for i in range(2)
        ]
        assert product == [[1, 0], [0, 1]]


class TestPrimitive:
    @pytest.mark.parametrize(
        "vector, expected",
        [([2, 4, -6], [1, 2, -3]), ([0, 0], [0, 0]), ([-3], [-1]), ([5, 7], [5, 7])],
    )
    def test_primitive(self, vector, expected):
        assert primitive(vector) == expected
