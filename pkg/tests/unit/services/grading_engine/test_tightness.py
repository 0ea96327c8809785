"""Unit tests for tightness verdicts."""

import pytest

from services.block_catalog import all_blocks, known_profile
from services.grading_engine import Verdict, is_homogeneous, redundant_arrows, tightness


class TestTightness:
    """Decided verdicts for catalog blocks."""

    @pytest.mark.parametrize(
        "family, r, c",
        [
            ("A", 1, None),
            ("A", 3, None),
            ("B", 1, None),
            ("C", 4, None),
            ("D2A", 2, 0),
            ("D2B", 3, 0),
            ("D1C", 2, None),
        ],
    )
    def test_tight(self, catalog, family, r, c):
        result = tightness(catalog(family, r, c))
        assert result.verdict is Verdict.TIGHT
        assert result.is_tight is True
        assert set(result.witness.values()) == {1}

    def test_b2_obstruction_trace(self, b2):
        result = tightness(b2)
        assert result.verdict is Verdict.NOT_TIGHT
        assert result.trace == ("d1*c1 = (c2*d2)^2 forces degree 2 = 4",)
        assert result.witness is None

    @pytest.mark.parametrize(
        "family, r, c",
        [
            ("B", 3, None),
            ("C", 2, None),
            ("C", 3, None),
            ("D2B", 2, 0),
            ("D2A", 2, 1),
            ("D2A", 3, 1),
            ("D2B", 2, 1),
        ],
    )
    def test_not_tight(self, catalog, family, r, c):
        result = tightness(catalog(family, r, c))
        assert result.verdict is Verdict.NOT_TIGHT
        assert "forces degree" in result.trace[0]


class TestSharedCorrections:
    """t_a carries the same correction coefficients at every occurrence of a."""

    @pytest.mark.parametrize(
        "family, r, c",
        [("D2A", 1, 1), ("D2B", 1, 1), ("D2B", 2, 1), ("D2B", 3, 1)],
    )
    def test_alpha_square_obstruction(self, catalog, family, r, c):
        result = tightness(catalog(family, r, c))
        assert result.verdict is Verdict.NOT_TIGHT
        assert result.trace == ("alpha^2 = alpha*beta*gamma forces degree 2 = 3",)


class TestRedundantArrows:
    """Arrows in rad^2 do not need degree 1."""

    def test_eta_is_redundant_for_r_1(self, catalog):
        assert redundant_arrows(catalog("D2B", 1, 0)) == ("eta",)
        assert redundant_arrows(catalog("D2B", 2, 0)) == ()

    def test_admissible_blocks_have_none(self, catalog, b2):
        assert redundant_arrows(b2) == ()
        assert redundant_arrows(catalog("D1C", 2)) == ()

    def test_d2b_1_0_is_tight(self, catalog):
        pres = catalog("D2B", 1, 0)
        result = tightness(pres)
        assert result.verdict is Verdict.TIGHT
        assert result.witness.as_dict() == {"alpha": 1, "beta": 1, "gamma": 1, "eta": 3}
        assert is_homogeneous(pres, result.witness)
        assert result.trace == ("irredundant arrows in degree 1; eta = 3 in rad^2",)

    def test_inconsistent_degrees_fall_through(self, catalog):
        # alpha, beta, gamma in degree 1 clash with alpha^2 = alpha*beta*gamma
        result = tightness(catalog("D2B", 1, 1))
        assert result.verdict is Verdict.NOT_TIGHT


class TestCatalogSweep:
    """Every catalog block gets a decided verdict matching the summary table."""

    @pytest.mark.slow
    @pytest.mark.parametrize("block", all_blocks(3), ids=lambda b: b.label)
    def test_decided_and_known(self, catalog, block):
        result = tightness(catalog(block.family, block.r, block.c))
        assert result.verdict is not Verdict.UNKNOWN
        assert result.is_tight is known_profile(block).at(block.r).tight
