"""
Cocharacters and Gradings

A grading up to graded Morita equivalence is a cocharacter of a maximal
torus of Out, and on arrow-degree gradings it is the class of the degree
vector in H / B. The free coordinates of that class, in the canonical basis
of the grading lattice, are the integers of the cocharacter.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from services.common.errors import InhomogeneousGradingError
from services.grading_engine import GradingLattice, grading_lattice
from services.quiver_core import DegreeAssignment
from services.rewrite_engine import AlgebraPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cocharacter:
    """
    Integer exponents of a cocharacter, one per torus coordinate.

    Attributes:
        exponents: free coordinates in H / B
        torsion: residues in the torsion part of H / B (empty for the catalog)
    """

    exponents: tuple[int, ...]
    torsion: tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.exponents)

    def is_trivial(self) -> bool:
        return not any(self.exponents) and not any(self.torsion)

    def __str__(self) -> str:
        return "(" + ", ".join(str(m) for m in self.exponents) + ")"


def _lattice(pres: AlgebraPresentation, lattice: Optional[GradingLattice] = None) -> GradingLattice:
    return lattice if lattice is not None else grading_lattice(pres)


def classify_grading(
    pres: AlgebraPresentation, deg: DegreeAssignment, lattice: Optional[GradingLattice] = None
) -> Cocharacter:
    """
    The cocharacter of a homogeneous grading.

    Raises:
        InhomogeneousGradingError: if deg is not homogeneous
    """
    if not deg.is_integral:
        raise InhomogeneousGradingError("Only integer gradings can be classified")
    free, torsion = _lattice(pres, lattice).classify(deg.vector())
    return Cocharacter(free, torsion)


def cocharacter_to_grading(
    pres: AlgebraPresentation, chi: Cocharacter, lattice: Optional[GradingLattice] = None
) -> DegreeAssignment:
    """
    The canonical arrow-degree representative of a cocharacter.

    Raises:
        ValueError: if chi has the wrong rank
    """
    grid = _lattice(pres, lattice)
    if chi.rank != grid.rank:
        raise ValueError(f"{pres.name} has torus rank {grid.rank}, cocharacter has {chi.rank}")
    return DegreeAssignment.from_vector(pres.quiver, grid.representative(chi.exponents))


def _swap_image(pres: AlgebraPresentation, deg: DegreeAssignment) -> DegreeAssignment:
    return DegreeAssignment(deg.arrows, {"alpha": deg["beta"], "beta": deg["alpha"]})


def conjugate_cocharacters(
    pres: AlgebraPresentation,
    first: Cocharacter,
    second: Cocharacter,
    connected_only: bool = False,
) -> bool:
    """
    Whether two cocharacters give graded Morita equivalent gradings.

    Within Out^0 classes are distinct. For D(1C) the antidiagonal automorphisms
    swap alpha and beta, so (a, b) and (b, a) are conjugate in Out unless
    connected_only is set.
    """
    if first == second:
        return True
    block = pres.block
    if connected_only or block is None or block.family != "D1C":
        return False
    lattice = grading_lattice(pres)
    swapped = _swap_image(pres, cocharacter_to_grading(pres, first, lattice))
    return classify_grading(pres, swapped, lattice) == second


__all__ = [
    "Cocharacter",
    "classify_grading",
    "cocharacter_to_grading",
    "conjugate_cocharacters",
]
