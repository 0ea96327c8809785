"""Unit tests for the block catalog."""

import pytest

from services.block_catalog import (
    BlockId,
    RCondition,
    all_blocks,
    block_relations,
    known_profile,
    load_known_profiles,
    make_block,
    parse_block_id,
)
from services.common.errors import InvalidBlockError
from services.quiver_core import GF2


class TestBlockId:
    """Validation and labels."""

    @pytest.mark.parametrize(
        "family, r, c, label",
        [("A", 2, None, "A_2"), ("D2B", 3, 1, "D2B^{3,1}"), ("D1C", 1, None, "D1C_1")],
    )
    def test_label(self, family, r, c, label):
        assert BlockId(family, r, c).label == label

    @pytest.mark.parametrize(
        "family, r, c, message",
        [
            ("E", 1, None, "Unknown family"),
            ("A", 0, None, "positive integer"),
            ("A", True, None, "positive integer"),
            ("D2A", 1, 2, "c must be 0 or 1"),
            ("D2A", 1, None, "c must be 0 or 1"),
            ("B", 1, 0, "takes no c"),
        ],
    )
    def test_invalid(self, family, r, c, message):
        with pytest.raises(InvalidBlockError, match=message):
            BlockId(family, r, c)

    def test_c1_is_a1(self):
        assert BlockId("C", 1).canonical() == BlockId("A", 1)
        assert BlockId("C", 2).canonical() == BlockId("C", 2)
        assert make_block(BlockId("C", 1), GF2) is make_block(BlockId("A", 1), GF2)

    def test_parse_block_id(self):
        assert parse_block_id("d2a", 2) == BlockId("D2A", 2, 0)
        assert parse_block_id(" a ", 3) == BlockId("A", 3)
        with pytest.raises(InvalidBlockError, match="takes no c"):
            parse_block_id("B", 2, 1)


class TestConstructors:
    """Quivers, relations and dimensions of the families."""

    @pytest.mark.parametrize(
        "block, vertices, arrows, relations",
        [
            (BlockId("A", 1), 3, 4, 3),
            (BlockId("B", 1), 3, 6, 9),
            (BlockId("C", 2), 3, 5, 6),
            (BlockId("D2A", 1, 0), 2, 3, 3),
            (BlockId("D2B", 1, 1), 2, 4, 6),
            (BlockId("D1C", 1), 1, 2, 3),
        ],
    )
    def test_shapes(self, block, vertices, arrows, relations):
        quiver, rels = block_relations(block, GF2)
        assert len(quiver.vertices) == vertices
        assert len(quiver.arrows) == arrows
        assert len(rels) == relations

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_dimension_of_a(self, catalog, r):
        assert catalog("A", r).dimension == 16 * r + 2

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_dimension_of_d1c(self, catalog, r):
        assert catalog("D1C", r).dimension == 4 * r

    def test_cached_per_field(self, gf4):
        over_gf2 = make_block(BlockId("A", 1), GF2)
        assert make_block(BlockId("A", 1), GF2) is over_gf2
        assert make_block(BlockId("A", 1), gf4) is not over_gf2

    def test_all_blocks(self):
        blocks = all_blocks(2)
        assert BlockId("C", 1) not in blocks
        assert BlockId("C", 2) in blocks
        assert BlockId("D2A", 2, 1) in blocks
        # A, B, D1C: 2 each; C: 1; D2A, D2B: 4 each
        assert len(blocks) == 15


class TestKnownProfiles:
    """The summary table."""

    def test_every_block_has_a_row(self):
        profiles = load_known_profiles()
        for block in all_blocks(3):
            assert known_profile(block, profiles) is not None

    @pytest.mark.parametrize(
        "block, positive, tight, torus",
        [
            (BlockId("B", 1), True, True, 2),
            (BlockId("B", 2), True, False, 2),
            (BlockId("C", 4), True, True, 2),
            (BlockId("D2A", 2, 1), True, False, 1),
            (BlockId("D2A", 3, 1), False, False, 1),
            (BlockId("D2B", 3, 0), True, True, 2),
            (BlockId("D2B", 1, 0), True, True, 2),
            (BlockId("D2B", 2, 0), True, False, 2),
            (BlockId("C", 1), True, True, 2),
        ],
    )
    def test_rows(self, block, positive, tight, torus):
        row = known_profile(block).at(block.r)
        assert row.positive is positive
        assert row.tight is tight
        assert row.torus_rank == torus

    @pytest.mark.parametrize(
        "value, r, holds",
        [
            ("always", 7, True),
            (False, 1, False),
            ({"only": [1, 4]}, 4, True),
            ({"only": [1, 4]}, 2, False),
            ({"at_most": 2}, 2, True),
            ({"at_most": 2}, 3, False),
        ],
    )
    def test_r_condition(self, value, r, holds):
        assert RCondition.from_value(value).holds(r) is holds

    def test_r_condition_invalid(self):
        with pytest.raises(ValueError, match="Invalid condition"):
            RCondition.from_value({"sometimes": 1})

    def test_r_condition_str(self):
        assert str(RCondition.from_value({"at_most": 2})) == "only if r <= 2"

    def test_duplicate_rows(self, tmp_path):
        path = tmp_path / "profiles.yml"
        row = "  - {family: A, positive: always, tight: always, torus_rank: 2}\n"
        path.write_text("profiles:\n" + row + row, encoding="utf-8")
        with pytest.raises(ValueError, match="Duplicate"):
            load_known_profiles(str(path))

    def test_malformed_row(self, tmp_path):
        path = tmp_path / "profiles.yml"
        path.write_text("profiles:\n  - {family: A}\n", encoding="utf-8")
        with pytest.raises(ValueError, match="Malformed"):
            load_known_profiles(str(path))
