"""
Quiver Core

Quivers, paths and exact linear combinations of paths over GF(2^m), plus
the sparse GF(2^m) linear algebra the other services build on.
"""

from .field import GF2, FieldElement, GaloisField, field_of
from .graded import Degree, DegreeAssignment, GradedVectorSpace, degrees_equal, normalize_degree
from .linalg import EchelonBasis, nullspace, rank
from .quiver import (
    AlgebraElement,
    Arrow,
    Path,
    Quiver,
    compose_paths,
    format_element,
    format_path,
    format_word,
    multiply_elements,
)

__all__ = [
    "GF2",
    "AlgebraElement",
    "Arrow",
    "Degree",
    "DegreeAssignment",
    "GradedVectorSpace",
    "EchelonBasis",
    "FieldElement",
    "GaloisField",
    "Path",
    "Quiver",
    "compose_paths",
    "degrees_equal",
    "field_of",
    "format_element",
    "format_path",
    "format_word",
    "multiply_elements",
    "normalize_degree",
    "nullspace",
    "rank",
]
