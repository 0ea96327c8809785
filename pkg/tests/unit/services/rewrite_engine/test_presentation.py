"""Unit tests for completion, normal forms and bases."""

import pytest

from services.common.errors import NotFiniteDimensionalError, QuiverError
from services.quiver_core import GF2, AlgebraElement, Arrow, DegreeAssignment, Quiver, field_of
from services.rewrite_engine import Relation, complete


def make_loop_quiver() -> Quiver:
    return Quiver(["1"], [Arrow("x", "1", "1")])


def word(quiver: Quiver, *names: str, field=GF2) -> AlgebraElement:
    return AlgebraElement.from_path(quiver, field, quiver.path(*names))


class TestComplete:
    """Completion of quivers with relations."""

    def test_truncated_loop(self):
        q = make_loop_quiver()
        zero = AlgebraElement.zero(q, GF2)
        pres = complete(q, [Relation(word(q, "x", "x", "x"), zero)], max_len=10)
        assert pres.dimension == 3
        assert [str(p) for p in pres.basis] == ["e(1)", "x", "x^2"]

    def test_free_loop_is_infinite(self):
        q = make_loop_quiver()
        with pytest.raises(NotFiniteDimensionalError) as excinfo:
            complete(q, [], max_len=6)
        assert excinfo.value.witness.length == 6

    def test_relation_over_wrong_field(self):
        q = make_loop_quiver()
        gf4 = field_of(2)
        relation = Relation(word(q, "x", "x", field=gf4), AlgebraElement.zero(q, gf4))
        with pytest.raises(QuiverError, match="is not over"):
            complete(q, [relation], max_len=10)

    def test_non_parallel_relation(self):
        q = Quiver(["1", "2"], [Arrow("a", "1", "2"), Arrow("b", "2", "1")])
        with pytest.raises(QuiverError, match="not parallel"):
            Relation(word(q, "a"), word(q, "b"))

    def test_overlap_is_resolved(self):
        # x^2 = x^3 and x^4 = 0 force x^2 = 0 after completion
        q = make_loop_quiver()
        zero = AlgebraElement.zero(q, GF2)
        relations = [
            Relation(word(q, "x", "x", "x"), word(q, "x", "x")),
            Relation(word(q, "x", "x", "x", "x"), zero),
        ]
        pres = complete(q, relations, max_len=10)
        assert pres.dimension == 2
        assert pres.normal_form(word(q, "x", "x")).is_zero()


class TestCatalogDimensions:
    """Dimensions and Cartan data of catalog blocks."""

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_family_a_dimension(self, catalog, r):
        assert catalog("A", r).dimension == 16 * r + 2

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_family_a_cartan(self, catalog, r):
        cartan = catalog("A", r).cartan_matrix()
        assert cartan[("1", "1")] == 4 * r
        assert cartan[("1", "2")] == cartan[("2", "1")] == 2 * r
        assert cartan[("2", "2")] == r + 1
        assert cartan[("2", "3")] == r

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_d1c_dimension(self, catalog, r):
        assert catalog("D1C", r).dimension == 4 * r

    @pytest.mark.parametrize(
        "family, r, c",
        [("B", 2, None), ("C", 2, None), ("D2A", 2, 0), ("D2A", 2, 1), ("D2B", 2, 0), ("D2B", 2, 1)],
    )
    def test_cartan_is_symmetric(self, catalog, family, r, c):
        pres = catalog(family, r, c)
        cartan = pres.cartan_matrix()
        assert all(cartan[(i, j)] == cartan[(j, i)] for i, j in cartan)
        assert sum(cartan.values()) == pres.dimension


class TestNormalForm:
    """Reduction by the completed system."""

    def test_cycle_relation(self, a1):
        left = a1.element("a1", "a2", "b1", "b2")
        right = a1.element("b1", "b2", "a1", "a2")
        assert left == right
        assert not left.is_zero()

    def test_monomial_relation(self, a2):
        assert a2.element("a2", "a1").is_zero()

    def test_past_socle_is_zero(self, a1):
        assert a1.element("a1", "a2", "b1", "b2", "a1").is_zero()

    def test_multiply_reduces(self, b2):
        assert b2.multiply(b2.arrow("d1"), b2.arrow("c1")) == b2.power(b2.element("c2", "d2"), 2)

    def test_coordinates(self, a1):
        element = a1.element("a1") + a1.element("b1")
        coordinates = a1.coordinates(element)
        assert len(coordinates) == 2
        assert set(coordinates) == {a1.basis_index(p) for p in element.paths()}

    def test_hom_space_tight_degrees(self, a2):
        tight = DegreeAssignment.uniform(a2.quiver, 1)
        assert a2.hom_space("2", "2", tight).degrees() == [0, 4, 8]
        assert a2.hom_space("2", "2").dimension == 3
