"""
Grading Engine

Integer gradings on arrows: the homogeneity lattice H, coboundaries B and
the classification H / B, rescaling and Morita shifts, positivity and
tightness verdicts.
"""

from .homogeneity import (
    GradingLattice,
    coboundary_vector,
    grading_lattice,
    homogeneity_system,
    is_homogeneous,
    morita_shift,
    require_homogeneous,
    rescale,
)
from .lattice import IntegerKernel, diagonalize, integer_kernel, primitive
from .positivity import extreme_rays, negative_cycles, positive_grading_exists, sign_dichotomy_holds
from .tightness import TightnessVerdict, Verdict, redundant_arrows, tightness

__version__ = "1.0.0"

__all__ = [
    "GradingLattice",
    "IntegerKernel",
    "TightnessVerdict",
    "Verdict",
    "coboundary_vector",
    "diagonalize",
    "extreme_rays",
    "grading_lattice",
    "homogeneity_system",
    "integer_kernel",
    "is_homogeneous",
    "morita_shift",
    "negative_cycles",
    "positive_grading_exists",
    "primitive",
    "redundant_arrows",
    "require_homogeneous",
    "rescale",
    "sign_dichotomy_holds",
    "tightness",
]
