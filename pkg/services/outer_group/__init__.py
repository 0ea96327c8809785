"""
Outer Group

Automorphisms of catalog algebras, their normal forms in Out^0, the group
H_r, maximal torus ranks and the cocharacter classification of gradings.
"""

from .automorphisms import (
    Endomorphism,
    apply,
    automorphism_defects,
    check_automorphism,
    compose,
    identity,
    inner,
    unit_inverse,
)
from .cocharacters import (
    Cocharacter,
    classify_grading,
    cocharacter_to_grading,
    conjugate_cocharacters,
)
from .hr_group import HrElement, hr_decompose, hr_inverse, hr_mul, substitute
from .normalization import (
    NORMALIZABLE_FAMILIES,
    OuterTuple,
    d2b_coefficients,
    identity_coordinates,
    identity_tuple,
    lift,
    normalize_outer,
    outer_mul,
)
from .tori import maximal_torus_rank, normalized_representative, torus_coordinates

__version__ = "1.0.0"

__all__ = [
    "NORMALIZABLE_FAMILIES",
    "Cocharacter",
    "Endomorphism",
    "HrElement",
    "OuterTuple",
    "apply",
    "automorphism_defects",
    "check_automorphism",
    "classify_grading",
    "cocharacter_to_grading",
    "compose",
    "conjugate_cocharacters",
    "d2b_coefficients",
    "hr_decompose",
    "hr_inverse",
    "hr_mul",
    "identity",
    "identity_coordinates",
    "identity_tuple",
    "inner",
    "lift",
    "maximal_torus_rank",
    "normalize_outer",
    "normalized_representative",
    "outer_mul",
    "substitute",
    "torus_coordinates",
    "unit_inverse",
]
