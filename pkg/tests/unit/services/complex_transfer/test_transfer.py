"""Unit tests for tilting complexes and grading transfer."""

import pytest

from services.block_catalog import BlockId, make_block
from services.common.errors import InhomogeneousGradingError, TransferError
from services.complex_transfer import (
    get_edge,
    hom_table,
    irreducible_maps,
    tilting_complex,
    transfer_grading,
)
from services.grading_engine import grading_lattice, is_homogeneous
from services.quiver_core import DegreeAssignment
from services.rewrite_engine import complete


def tight_to_b(r: int) -> dict:
    return {"c1": -1, "d3": -1, "c2": 2, "d2": 2, "c3": 4 * r + 1, "d1": 4 * r + 1}


def random_positive(pres, rng, low=1, high=5) -> DegreeAssignment:
    return DegreeAssignment.for_quiver(
        pres.quiver, {a: rng.randint(low, high) for a in pres.quiver.arrow_names}
    )


def random_homogeneous(pres, rng, spread=4) -> DegreeAssignment:
    """A random element of H: lattice basis vectors with coefficients of both signs."""
    vector = [0] * len(pres.quiver.arrows)
    for generator in grading_lattice(pres).basis():
        k = rng.randint(-spread, spread)
        vector = [x + k * g for x, g in zip(vector, generator)]
    return DegreeAssignment.from_vector(pres.quiver, vector)


def b_to_c(source) -> dict:
    c1, c2, c3 = source["c1"], source["c2"], source["c3"]
    d2, d3 = source["d2"], source["d3"]
    return {"a1": d2 + d3, "a2": -d2, "b1": -c1, "b2": c1 + c3, "c": c2 + d2}


def d2a_to_d2b(source, r: int) -> dict:
    d1, d3 = source["alpha"], source["gamma"]
    d = d1 + source["beta"] + d3
    return {"alpha": d1, "beta": -d1 - d3, "gamma": r * d + d3, "eta": d}


class TestEdges:
    def test_get_edge(self):
        edge = get_edge(" a-b ")
        assert (edge.source, edge.target, edge.hub) == ("A", "B", "1")

    def test_unknown_edge(self):
        with pytest.raises(TransferError, match="Unknown transfer edge"):
            get_edge("A-C")

    def test_wrong_source_family(self):
        with pytest.raises(TransferError, match="starts at A"):
            get_edge("A-B").target_block(BlockId("B", 2))

    def test_b1_targets_a1(self):
        assert get_edge("B-C").target_block(BlockId("B", 1)) == BlockId("A", 1)


class TestTiltingComplex:
    """The two-term complexes of each edge."""

    def test_a_to_b_tight(self, a2):
        tilting = tilting_complex("A-B", a2, DegreeAssignment.uniform(a2.quiver, 1))
        assert str(tilting.summands["1"]) == "T_1 = [0: P2<-1> + P3<-1>; 1: P1]"
        assert tilting.summands["2"].is_stalk()
        assert tilting.target == BlockId("B", 2)

    def test_d2a_shifts(self, catalog):
        pres = catalog("D2A", 2, 0)
        deg = DegreeAssignment.for_quiver(pres.quiver, {"alpha": 2, "beta": 1, "gamma": 3})
        tilting = tilting_complex("D2A-D2B", pres, deg)
        assert str(tilting.summands["0"]) == "T_0 = [0: P1<-3> + P1<-5>; 1: P0]"

    def test_b_to_c_relabels_for_r1(self, catalog):
        tilting = tilting_complex("B-C", catalog("B", 1))
        assert tilting.target == BlockId("A", 1)
        assert not tilting.summands["1"].is_stalk()
        assert tilting.summands["1"].name == "T_1"

    def test_hom_table_of_stalks(self, a2):
        deg = DegreeAssignment.uniform(a2.quiver, 1)
        table = hom_table(tilting_complex("A-B", a2, deg), a2, deg)
        assert sorted(table[("2", "2")].degrees()) == [0, 4, 8]

    def test_non_catalog_source(self, a1):
        bare = complete(a1.quiver, a1.relations, max_len=16)
        with pytest.raises(TransferError, match="not a catalog block"):
            tilting_complex("A-B", bare)


class TestDimensionOracle:
    """Ungraded Hom tables reproduce the target dimension."""

    @pytest.mark.parametrize(
        "edge, family, r, c",
        [
            ("A-B", "A", 1, None),
            ("A-B", "A", 2, None),
            ("B-C", "B", 2, None),
            ("D2A-D2B", "D2A", 2, 0),
            ("D2A-D2B", "D2A", 2, 1),
        ],
    )
    def test_total_dimension(self, catalog, edge, family, r, c):
        pres = catalog(family, r, c)
        tilting = tilting_complex(edge, pres)
        total = sum(space.dimension for space in hom_table(tilting, pres).values())
        assert total == make_block(tilting.target, pres.field).dimension

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "edge, family, c", [("A-B", "A", None), ("B-C", "B", None), ("D2A-D2B", "D2A", 0)]
    )
    @pytest.mark.parametrize("r", [3, 4])
    def test_total_dimension_larger_r(self, catalog, edge, family, c, r):
        pres = catalog(family, r, c)
        tilting = tilting_complex(edge, pres)
        total = sum(space.dimension for space in hom_table(tilting, pres).values())
        assert total == make_block(tilting.target, pres.field).dimension


class TestTransferGrading:
    """Induced gradings along the three edges."""

    @pytest.mark.parametrize("r", [1, 2])
    def test_tight_a_to_b(self, catalog, r):
        pres = catalog("A", r)
        result = transfer_grading("A-B", pres, DegreeAssignment.uniform(pres.quiver, 1))
        assert result.as_dict() == tight_to_b(r)
        assert result.alternatives == []

    @pytest.mark.slow
    @pytest.mark.parametrize("r", [3, 4])
    def test_tight_a_to_b_larger_r(self, catalog, r):
        pres = catalog("A", r)
        result = transfer_grading("A-B", pres, DegreeAssignment.uniform(pres.quiver, 1))
        assert result.as_dict() == tight_to_b(r)

    def test_a_to_b_is_homogeneous(self, a2, rng):
        target = make_block(BlockId("B", 2))
        for _ in range(5):
            result = transfer_grading("A-B", a2, random_positive(a2, rng))
            assert is_homogeneous(target, result.grading)

    @pytest.mark.parametrize("r", [1, 2])
    def test_a_to_b_mixed_signs(self, catalog, rng, r):
        pres = catalog("A", r)
        target = catalog("B", r)
        for _ in range(5):
            result = transfer_grading("A-B", pres, random_homogeneous(pres, rng))
            assert is_homogeneous(target, result.grading)

    def test_b_to_c_closed_form(self, a2, b2, rng):
        for _ in range(5):
            source = transfer_grading("A-B", a2, random_positive(a2, rng)).grading
            assert transfer_grading("B-C", b2, source).as_dict() == b_to_c(source)

    def test_b_to_c_mixed_signs(self, b2, rng):
        for _ in range(8):
            source = random_homogeneous(b2, rng)
            assert transfer_grading("B-C", b2, source).as_dict() == b_to_c(source)

    def test_b_to_c_when_gamma2_plus_delta2_vanishes(self, b2):
        source = DegreeAssignment.for_quiver(
            b2.quiver, {"c1": 0, "c2": 4, "c3": 4, "d1": 0, "d2": -4, "d3": -4}
        )
        assert is_homogeneous(b2, source)
        result = transfer_grading("B-C", b2, source)
        assert result.as_dict() == {"a1": -8, "a2": 4, "b1": 0, "b2": 4, "c": 0}
        assert sorted(result.irreducible[("3", "3")].degrees()) == [0]

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_d2a_to_d2b_closed_form(self, catalog, rng, r):
        pres = catalog("D2A", r, 0)
        for _ in range(5):
            d1, d2, d3 = (rng.randint(0, 4) for _ in range(3))
            deg = DegreeAssignment.for_quiver(pres.quiver, {"alpha": d1, "beta": d2, "gamma": d3})
            result = transfer_grading("D2A-D2B", pres, deg)
            assert result.as_dict() == d2a_to_d2b(deg, r)

    @pytest.mark.parametrize("c", [0, 1])
    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_d2a_to_d2b_mixed_signs(self, catalog, rng, r, c):
        pres = catalog("D2A", r, c)
        target = catalog("D2B", r, c)
        for _ in range(4):
            deg = random_homogeneous(pres, rng)
            result = transfer_grading("D2A-D2B", pres, deg)
            assert result.as_dict() == d2a_to_d2b(deg, r)
            assert is_homogeneous(target, result.grading)

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_d2a_c1_lands_in_target_lattice(self, catalog, r):
        pres = catalog("D2A", r, 1)
        generator = grading_lattice(pres).representative((1,))
        deg = DegreeAssignment.from_vector(pres.quiver, generator)
        result = transfer_grading("D2A-D2B", pres, deg)
        target = catalog("D2B", r, 1)
        assert grading_lattice(target).contains(result.grading.vector())
        assert result.grading["alpha"] == generator[0]

    def test_inhomogeneous_source(self, b2):
        with pytest.raises(InhomogeneousGradingError):
            transfer_grading("B-C", b2, DegreeAssignment.uniform(b2.quiver, 1))

    def test_symbolic_source(self, a1):
        deg = DegreeAssignment.symbolic(a1.quiver, {"a1": "x", "a2": "x", "b1": "y", "b2": "y"})
        with pytest.raises(InhomogeneousGradingError, match="integer"):
            transfer_grading("A-B", a1, deg)


class TestIrreducibleMaps:
    """Arrow degrees are read from rad / rad^2 of End(T)."""

    def test_a2_tight_first_pair(self, a2):
        deg = DegreeAssignment.uniform(a2.quiver, 1)
        tilting = tilting_complex("A-B", a2, deg)
        irreducible = irreducible_maps(tilting, a2, hom_table(tilting, a2, deg))
        assert irreducible[("1", "2")].degrees() == [-1]

    @pytest.mark.parametrize(
        "edge, family, r, c",
        [("A-B", "A", 2, None), ("B-C", "B", 2, None), ("D2A-D2B", "D2A", 2, 1)],
    )
    def test_one_irreducible_map_per_arrow(self, catalog, rng, edge, family, r, c):
        pres = catalog(family, r, c)
        result = transfer_grading(edge, pres, random_homogeneous(pres, rng))
        target = make_block(result.target, pres.field)
        for arrow in target.quiver.arrows:
            degrees = result.irreducible[(arrow.source, arrow.target)].degrees()
            assert degrees == [result.grading[arrow.name]]

    def test_no_irreducible_maps_between_unlinked_vertices(self, b2, rng):
        result = transfer_grading("B-C", b2, random_homogeneous(b2, rng))
        assert result.irreducible[("1", "3")].dimension == 0
