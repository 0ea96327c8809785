"""Unit tests for GF(2^m) arithmetic."""

import pytest

from services.common.errors import FieldError
from services.quiver_core import GF2, GaloisField, field_of


class TestGaloisField:
    """Construction, literals and shared instances."""

    def test_field_of_returns_shared_instance(self):
        assert field_of(3) is field_of(3)
        assert field_of(1) is GF2

    @pytest.mark.parametrize("degree", [0, 9, -1])
    def test_unsupported_degree_rejected(self, degree):
        with pytest.raises(FieldError, match="Unsupported field"):
            GaloisField(degree)

    def test_literal_out_of_range(self, gf4):
        with pytest.raises(FieldError, match="out of range"):
            gf4(4)

    def test_literal_bits_are_polynomial_coefficients(self, gf4):
        x = gf4(2)
        assert x * x == gf4(3)
        assert x * x == x + gf4.one

    def test_bool_is_not_a_literal(self, gf4):
        with pytest.raises(FieldError):
            gf4(True)

    @pytest.mark.parametrize("degree", range(1, 9))
    def test_multiplicative_group_is_cyclic(self, degree):
        field = field_of(degree)
        g = field.generator()
        seen = {int(g**k) for k in range(field.order - 1)}
        assert len(seen) == field.order - 1


class TestFieldElement:
    """Arithmetic on elements."""

    @pytest.mark.parametrize("degree", [1, 2, 3, 8])
    def test_inverse(self, degree):
        field = field_of(degree)
        for a in field.nonzero_elements():
            assert a * a.inverse() == field.one
            assert field.one / a == a.inverse()

    def test_division_by_zero(self, gf4):
        with pytest.raises(FieldError, match="Division by zero"):
            gf4.one / gf4.zero

    def test_addition_is_subtraction(self, gf4):
        a, b = gf4(2), gf4(3)
        assert a + b == a - b
        assert a + a == gf4.zero
        assert -a == a

    @pytest.mark.parametrize("degree", [1, 2, 4, 5])
    def test_sqrt_inverts_frobenius(self, degree):
        field = field_of(degree)
        for a in field.elements():
            assert a.sqrt() * a.sqrt() == a

    def test_cross_field_arithmetic_rejected(self, gf4):
        gf8 = field_of(3)
        with pytest.raises(FieldError, match="Cannot combine"):
            gf4(1) + gf8(1)

    def test_int_coercion(self, gf4):
        assert gf4(2) + 1 == gf4(3)
        assert int(gf4(3)) == 3

    def test_random_nonzero(self, gf4, rng):
        assert all(gf4.random_element(rng, nonzero=True) for _ in range(50))
