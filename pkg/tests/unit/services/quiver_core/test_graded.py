"""Unit tests for degree assignments and graded vector spaces."""

import pytest
import sympy

from services.common.errors import QuiverError
from services.quiver_core import (
    Arrow,
    DegreeAssignment,
    GradedVectorSpace,
    Quiver,
    degrees_equal,
    normalize_degree,
)


@pytest.fixture
def quiver() -> Quiver:
    return Quiver(["1", "2"], [Arrow("a", "1", "2"), Arrow("b", "2", "1")])


class TestDegreeAssignment:
    """Arrow degrees and path degrees."""

    def test_path_degree_is_sum(self, quiver):
        deg = DegreeAssignment.for_quiver(quiver, {"a": 2, "b": -1})
        assert deg.degree_of(quiver.path("a", "b", "a")) == 3
        assert deg.degree_of(quiver.vertex_path("1")) == 0

    def test_missing_arrow(self, quiver):
        with pytest.raises(QuiverError, match="misses arrows"):
            DegreeAssignment.for_quiver(quiver, {"a": 1})

    def test_unknown_arrow(self, quiver):
        with pytest.raises(QuiverError, match="unknown arrows"):
            DegreeAssignment.for_quiver(quiver, {"a": 1, "b": 1, "z": 1})

    def test_vector_round_trip(self, quiver):
        deg = DegreeAssignment.from_vector(quiver, [4, 5])
        assert deg.vector() == (4, 5)
        assert deg == {"a": 4, "b": 5}

    def test_symbolic_degrees(self, quiver):
        deg = DegreeAssignment.symbolic(quiver, {"a": "x", "b": "y"})
        x, y = sympy.symbols("x y")
        assert not deg.is_integral
        assert degrees_equal(deg.degree_of(quiver.path("a", "b", "a")), 2 * x + y)
        assert deg.substitute({x: 1, y: 2}) == {"a": 1, "b": 2}

    def test_normalize_collapses_integers(self):
        assert normalize_degree(sympy.Integer(3)) == 3
        assert isinstance(normalize_degree(sympy.Integer(3)), int)


class TestGradedVectorSpace:
    """Degree multisets."""

    def test_shift_labels_are_negated_degrees(self):
        space = GradedVectorSpace([0, 4, 8])
        assert space.dimension == 3
        assert space.shift_labels() == [-8, -4, 0]

    def test_multiplicity_and_sum(self):
        space = GradedVectorSpace([1, 1, 2]) + GradedVectorSpace([2])
        assert space.multiplicity(1) == 2
        assert space.multiplicity(2) == 2
        assert space.distinct_degrees() == [1, 2]

    def test_equality_ignores_order(self):
        assert GradedVectorSpace([3, 1]) == GradedVectorSpace([1, 3])

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError, match="Negative multiplicity"):
            GradedVectorSpace.from_counts({0: -1})
