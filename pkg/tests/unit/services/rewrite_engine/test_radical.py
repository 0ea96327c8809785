"""Unit tests for radical layers."""

import pytest
import sympy

from services.common.errors import InhomogeneousGradingError
from services.quiver_core import DegreeAssignment, degrees_equal
from services.rewrite_engine import LayerEntry, radical_layers, radical_square_corrections


class TestRadicalLayers:
    """Ungraded and graded layer tables."""

    def test_uniserial_projective(self, a1):
        table = radical_layers(a1, "2")
        assert [len(layer) for layer in table.layers] == [1, 1, 1, 1, 1]
        assert [list(c) for c in table.simples()] == [["2"], ["1"], ["3"], ["1"], ["2"]]

    def test_graded_tight_layers(self, a1):
        tight = DegreeAssignment.uniform(a1.quiver, 1)
        table = radical_layers(a1, "2", tight)
        assert [layer[0] for layer in table.layers] == [
            LayerEntry("2", 0),
            LayerEntry("1", 1),
            LayerEntry("3", 2),
            LayerEntry("1", 3),
            LayerEntry("2", 4),
        ]

    def test_biserial_projective(self, a2):
        table = radical_layers(a2, "1")
        assert table.dimension == 16
        assert table.loewy_length == 9
        assert table.top() == (LayerEntry("1"),)
        assert table.socle() == (LayerEntry("1"),)
        assert all(len(layer) == 2 for layer in table.layers[1:-1])

    def test_symbolic_socle_degree(self, a1):
        names = {"a1": "x1", "a2": "x2", "b1": "y1", "b2": "y2"}
        deg = DegreeAssignment.symbolic(a1.quiver, names)
        table = radical_layers(a1, "1", deg)
        socle = table.socle()[0]
        x1, x2, y1, y2 = sympy.symbols("x1 x2 y1 y2")
        assert socle.simple == "1"
        assert degrees_equal(socle.degree, x1 + x2 + y1 + y2)

    def test_inhomogeneous_grading_rejected(self, b2):
        with pytest.raises(InhomogeneousGradingError, match="not homogeneous"):
            radical_layers(b2, "1", DegreeAssignment.uniform(b2.quiver, 1))

    def test_d1c_layers(self, d1c2):
        table = radical_layers(d1c2, "1")
        assert [len(layer) for layer in table.layers] == [1, 2, 2, 2, 1]

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_d1c_socle_degree(self, catalog, r):
        pres = catalog("D1C", r)
        deg = DegreeAssignment.symbolic(pres.quiver, {"alpha": "a", "beta": "b"})
        socle = radical_layers(pres, "1", deg).socle()
        a, b = sympy.symbols("a b")
        assert len(socle) == 1
        assert degrees_equal(socle[0].degree, r * (a + b))

    @pytest.mark.parametrize("r", [2, 3])
    def test_d2a_uniserial_p1(self, catalog, r):
        pres = catalog("D2A", r, 0)
        deg = DegreeAssignment.symbolic(
            pres.quiver, {"alpha": "d1", "beta": "d2", "gamma": "d3"}
        )
        table = radical_layers(pres, "1", deg)
        d1, d2, d3 = sympy.symbols("d1 d2 d3")
        d = d1 + d2 + d3
        assert all(len(layer) == 1 for layer in table.layers)
        assert table.loewy_length == 3 * r + 1
        assert degrees_equal(table.layers[1][0].degree, d2)
        assert degrees_equal(table.layers[3][0].degree, d)
        # the factor below the socle sits in degree r*d - d3
        below_socle = table.layers[-2][0]
        assert below_socle.simple == "0"
        assert degrees_equal(below_socle.degree, r * d - d3)
        assert degrees_equal(table.socle()[0].degree, r * d)

    def test_render(self, a1):
        assert radical_layers(a1, "3").render().splitlines()[0] == "S3"


class TestRadicalSquare:
    """Bases of e_s rad^2 e_t."""

    def test_corrections_have_length_two_or_more(self, a1):
        corrections = radical_square_corrections(a1, "1", "2")
        assert corrections
        assert all(p.length >= 2 for c in corrections for p in c.paths())

    def test_non_adjacent_vertices(self, a1):
        # no arrow 2 -> 3, so every path between them lies in rad^2
        corrections = radical_square_corrections(a1, "2", "3")
        assert [str(c) for c in corrections] == ["a2*b1"]
