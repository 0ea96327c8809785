"""Unit tests for automorphisms and normalized outer classes."""

import pytest

from services.block_catalog import BlockId
from services.common.errors import AutomorphismError, QuiverError
from services.grading_engine import grading_lattice
from services.outer_group import (
    Endomorphism,
    HrElement,
    OuterTuple,
    automorphism_defects,
    check_automorphism,
    compose,
    identity,
    identity_tuple,
    inner,
    lift,
    maximal_torus_rank,
    normalize_outer,
    outer_mul,
    torus_coordinates,
    unit_inverse,
)

NORMALIZED = [("C", 2, None), ("D2B", 2, 0), ("D2B", 2, 1), ("D1C", 2, None)]


def random_tuple(pres, rng) -> OuterTuple:
    """A random class of Out^K for a C, D2B or D1C block."""
    block = pres.block
    field = pres.field
    r = block.r
    nonzero = lambda: field.random_element(rng, nonzero=True)  # noqa: E731
    anything = lambda: field.random_element(rng)  # noqa: E731
    if block.family == "C":
        return OuterTuple("C", r, None, (nonzero(),), HrElement.random(field, r, rng))
    if block.family == "D2B":
        scalars = (anything(), anything(), nonzero()) if block.c == 0 else (anything(), anything())
        return OuterTuple("D2B", r, block.c, scalars, HrElement.random(field, r, rng))
    if rng.random() < 0.5:
        return OuterTuple("D1C", r, None, (nonzero(), field.zero, field.zero, nonzero()))
    return OuterTuple("D1C", r, None, (field.zero, nonzero(), nonzero(), field.zero), None, True)


class TestEndomorphisms:
    """Endomorphisms, units and inner automorphisms."""

    def test_identity_is_automorphism(self, a1):
        assert check_automorphism(a1, identity(a1))

    def test_not_injective(self, d1c2):
        collapse = Endomorphism.from_images(d1c2, {"alpha": d1c2.arrow("beta")})
        defects = automorphism_defects(collapse)
        assert any("rank" in d for d in defects)
        assert not check_automorphism(d1c2, collapse)

    def test_zero_arrow_image(self, a1):
        killed = Endomorphism.from_images(a1, {"a1": a1.zero()})
        assert not check_automorphism(a1, killed)

    def test_unknown_arrow(self, a1):
        with pytest.raises(QuiverError, match="Unknown arrows"):
            Endomorphism.from_images(a1, {"z": a1.arrow("a1")})

    def test_unit_inverse(self, a1):
        unit = a1.one() + a1.element("a1", "a2")
        product = a1.multiply(unit, unit_inverse(a1, unit))
        assert product == a1.one()

    def test_non_unit(self, a1):
        with pytest.raises(AutomorphismError, match="not a unit"):
            unit_inverse(a1, a1.vertex("1"))

    def test_inner_is_automorphism(self, a1):
        unit = a1.one() + a1.element("a1", "a2")
        assert check_automorphism(a1, inner(a1, unit))


class TestNormalizeOuter:
    """Normalized coordinates of Out^K."""

    @pytest.mark.parametrize("family, r, c", NORMALIZED)
    def test_identity(self, catalog, family, r, c):
        pres = catalog(family, r, c)
        assert normalize_outer(pres, identity(pres)) == identity_tuple(pres)

    @pytest.mark.parametrize("family, r, c", NORMALIZED)
    def test_lift_round_trip(self, catalog, gf4, rng, family, r, c):
        pres = catalog(family, r, c, gf4)
        for _ in range(5):
            data = random_tuple(pres, rng)
            phi = lift(pres, data)
            assert check_automorphism(pres, phi)
            assert normalize_outer(pres, phi) == data

    @pytest.mark.parametrize("family, r, c", NORMALIZED)
    def test_multiplication_matches_composition(self, catalog, gf4, rng, family, r, c):
        pres = catalog(family, r, c, gf4)
        for _ in range(5):
            first, second = random_tuple(pres, rng), random_tuple(pres, rng)
            composed = compose(lift(pres, first), lift(pres, second))
            assert outer_mul(pres, first, second) == normalize_outer(pres, composed)

    def test_inner_conjugate_has_same_class(self, catalog, gf4, rng):
        pres = catalog("D2B", 2, 0, gf4)
        data = random_tuple(pres, rng)
        unit = pres.one() + pres.arrow("alpha").scale(gf4.random_element(rng, nonzero=True))
        conjugated = compose(inner(pres, unit), lift(pres, data))
        assert normalize_outer(pres, conjugated) == data

    def test_unsupported_family(self, a1):
        with pytest.raises(AutomorphismError, match="No normalized coordinates"):
            normalize_outer(a1, identity(a1))

    def test_foreign_endomorphism(self, catalog, gf4):
        over_gf2 = catalog("D1C", 2)
        over_gf4 = catalog("D1C", 2, None, gf4)
        with pytest.raises(AutomorphismError, match="another algebra"):
            normalize_outer(over_gf2, identity(over_gf4))

    def test_as_ints(self, c2):
        expected = {"family": "C", "r": 2, "scalars": [1], "series": [1, 0]}
        assert identity_tuple(c2).as_ints() == expected


class TestMaximalTorus:
    @pytest.mark.parametrize(
        "block, rank",
        [
            (BlockId("A", 3), 2),
            (BlockId("B", 2), 2),
            (BlockId("C", 1), 2),
            (BlockId("D2A", 3, 1), 1),
            (BlockId("D2A", 2, 0), 2),
            (BlockId("D2B", 4, 1), 1),
            (BlockId("D1C", 5), 2),
        ],
    )
    def test_rank(self, block, rank):
        assert maximal_torus_rank(block) == rank

    @pytest.mark.parametrize(
        "family, r, c",
        [
            ("B", 2, None),
            ("C", 3, None),
            ("D2A", 2, 1),
            ("D2B", 1, 0),
            ("D2B", 3, 0),
            ("D1C", 2, None),
        ],
    )
    def test_rank_matches_grading_lattice(self, catalog, family, r, c):
        pres = catalog(family, r, c)
        assert maximal_torus_rank(pres.block) == grading_lattice(pres).rank

    @pytest.mark.parametrize(
        "block, names",
        [
            (BlockId("C", 3), ("alpha_1*alpha_3", "gamma_1")),
            (BlockId("D2B", 2, 0), ("v", "d_1")),
            (BlockId("D2B", 2, 1), ("d_1",)),
            (BlockId("D1C", 2), ("m11", "m22")),
        ],
    )
    def test_coordinates_are_units_at_identity(self, block, names):
        assert torus_coordinates(block) == names

    @pytest.mark.parametrize("family, r, c", NORMALIZED)
    def test_torus_elements_commute(self, catalog, gf4, rng, family, r, c):
        pres = catalog(family, r, c, gf4)
        torus = set(torus_coordinates(pres.block))

        def torus_element() -> OuterTuple:
            unit = identity_tuple(pres)
            values = [
                gf4.random_element(rng, nonzero=True) if name in torus else value
                for name, value in unit.named_coordinates()
            ]
            k = len(unit.scalars)
            scalars = tuple(values[:k])
            series = HrElement(tuple(values[k:])) if unit.series is not None else None
            return OuterTuple(unit.family, unit.r, unit.c, scalars, series)

        for _ in range(3):
            x, y = torus_element(), torus_element()
            assert check_automorphism(pres, lift(pres, x))
            assert outer_mul(pres, x, y) == outer_mul(pres, y, x)
