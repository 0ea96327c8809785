"""Unit tests for the algebra description language."""

from pathlib import Path

import pytest

from services.block_catalog import BlockId, all_blocks
from services.cli import catalog_manifest, parse, parse_expression, print_manifest
from services.common.errors import DslSyntaxError, QuiverError
from services.quiver_core import DegreeAssignment

SAMPLES = Path(__file__).resolve().parents[4] / "samples"

TWO_VERTEX = """\
algebra Q {
  vertices: 1, 2;
  arrows: x: 1->2, y: 2->1;
  relations:
    x = y;
}
"""


def sample(name: str) -> str:
    return (SAMPLES / name).read_text(encoding="utf-8")


class TestParse:
    """Statements and manifests."""

    def test_catalog(self):
        manifest = parse("catalog D2A r=3 c=1;")
        assert manifest.catalog == BlockId("D2A", 3, 1)
        assert manifest.grading is None

    def test_catalog_default_c(self):
        assert parse("catalog d2b r=2;").catalog == BlockId("D2B", 2, 0)

    def test_explicit_algebra(self):
        manifest = parse(sample("d1c_r3.gqa"))
        assert manifest.name == "D1C"
        assert manifest.vertices == ("1",)
        assert [name for name, _, _ in manifest.arrows] == ["a", "b"]
        assert len(manifest.relations) == 3
        assert dict(manifest.grading) == {"a": 1, "b": 1}

    def test_negative_degrees(self):
        manifest = parse("catalog A r=1; grading { a1 = -1; a2 = 2; b1 = 0; b2 = 1; }")
        assert dict(manifest.grading)["a1"] == -1

    def test_grading_only(self):
        manifest = parse("grading { x = 1; }")
        assert not manifest.has_algebra

    def test_presentation_of_sample(self):
        pres = parse(sample("d1c_r3.gqa")).presentation()
        assert pres.dimension == 12

    def test_truncated_kronecker(self):
        pres = parse(sample("kronecker_truncated.gqa")).presentation()
        assert pres.dimension == 6

    def test_catalog_sample_grading(self):
        manifest = parse(sample("a2_tight.gqa"))
        pres = manifest.presentation()
        assert manifest.degree_assignment(pres) == DegreeAssignment.uniform(pres.quiver, 1)

    def test_grading_misses_arrows(self):
        manifest = parse("catalog A r=1; grading { a1 = 1; }")
        with pytest.raises(QuiverError, match="misses arrows"):
            manifest.degree_assignment(manifest.presentation())


class TestDiagnostics:
    """Error positions and expected tokens."""

    def test_unknown_arrow(self):
        text = "algebra Q {\n  vertices: 1;\n  arrows: a: 1->1;\n  relations: c = 0;\n}\n"
        with pytest.raises(DslSyntaxError) as info:
            parse(text)
        assert info.value.message == "unknown arrow c"
        assert (info.value.line, info.value.column) == (4, 14)
        assert info.value.expected == ["a"]

    def test_not_parallel(self):
        with pytest.raises(DslSyntaxError, match="not parallel: endpoints 1->2, 2->1") as info:
            parse(TWO_VERTEX)
        assert info.value.line == 5

    def test_zero_exponent(self):
        text = "algebra Q { vertices: 1; arrows: a: 1->1; relations: a^0 = 0; }"
        with pytest.raises(DslSyntaxError, match="exponent must be positive"):
            parse(text)

    def test_arrows_do_not_compose(self):
        text = "algebra Q { vertices: 1, 2; arrows: x: 1->2; relations: x*x = 0; }"
        with pytest.raises(DslSyntaxError, match="do not compose"):
            parse(text)

    def test_missing_semicolon(self):
        with pytest.raises(DslSyntaxError, match="end of input") as info:
            parse("catalog A r=2")
        assert info.value.expected == ["';'"]

    def test_bad_character(self):
        with pytest.raises(DslSyntaxError, match="unexpected character '\\$'"):
            parse("catalog A r=2; $")

    def test_invalid_block(self):
        with pytest.raises(DslSyntaxError, match="Unknown family"):
            parse("catalog E r=1;")

    def test_two_algebras(self):
        with pytest.raises(DslSyntaxError, match="only one algebra"):
            parse("catalog A r=1; catalog B r=1;")

    def test_unknown_vertex(self):
        with pytest.raises(DslSyntaxError, match="unknown vertex 3"):
            parse("algebra Q { vertices: 1, 2; arrows: x: 1->3; }")

    def test_duplicate_degree(self):
        with pytest.raises(DslSyntaxError, match="duplicate degree for a"):
            parse("algebra Q { vertices: 1; arrows: a: 1->1; } grading { a = 1; a = 2; }")


class TestPrint:
    """Canonical printing."""

    @pytest.mark.parametrize("block", all_blocks(2), ids=lambda b: b.label)
    def test_catalog_round_trip(self, block):
        manifest = catalog_manifest(block)
        assert parse(print_manifest(manifest)) == manifest

    @pytest.mark.parametrize("name", ["d1c_r3.gqa", "kronecker_truncated.gqa", "a2_tight.gqa"])
    def test_sample_round_trip(self, name):
        manifest = parse(sample(name))
        assert parse(print_manifest(manifest)) == manifest

    def test_powers_fold(self):
        printed = print_manifest(parse(sample("d1c_r3.gqa")))
        assert "(a*b)^3 = (b*a)^3;" in printed


class TestParseExpression:
    def test_sum(self, a1):
        element = parse_expression("a1*a2 + b1*b2", a1)
        assert sorted(str(p) for p in element.paths()) == ["a1*a2", "b1*b2"]

    def test_reduces_to_normal_form(self, a1):
        assert parse_expression("a2*a1", a1).is_zero()

    def test_trailing_tokens(self, a1):
        with pytest.raises(DslSyntaxError, match="unexpected"):
            parse_expression("a1 a2", a1)
