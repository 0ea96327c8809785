"""
Positive Gradings

A nonzero homogeneous assignment with all arrow degrees >= 0 exists iff the
cone {x >= 0 : Mx = 0} has an extreme ray. Extreme rays have minimal
support: an arrow subset S on which the restricted kernel is one-dimensional
and spanned by a vector with no zero entries and a single sign. Enumerating
subsets is exact, so infeasibility is a proof and not a search bound.
"""

from __future__ import annotations

import itertools
import logging
from typing import Mapping, Optional

import networkx as nx

from services.common.errors import CriterionInapplicableError
from services.common.settings import load_settings
from services.quiver_core import DegreeAssignment
from services.rewrite_engine import AlgebraPresentation

from .homogeneity import homogeneity_system, morita_shift
from .lattice import integer_kernel, primitive

logger = logging.getLogger(__name__)


def _check_applicable(pres: AlgebraPresentation) -> None:
    if pres.quiver.has_parallel_arrows() and not pres.is_catalog:
        raise CriterionInapplicableError(
            f"{pres.name} has parallel arrows; positivity is only decided for "
            "parallel-arrow-free quivers and catalog blocks"
        )


def extreme_rays(pres: AlgebraPresentation, max_arrows: Optional[int] = None) -> list[tuple[int, ...]]:
    """
    Primitive generators of the extreme rays of the nonnegative part of H.

    Raises:
        CriterionInapplicableError: parallel arrows outside the catalog, or more
            arrows than max_arrows
    """
    _check_applicable(pres)
    if max_arrows is None:
        max_arrows = load_settings().positivity.max_arrows
    n = len(pres.quiver.arrows)
    if n > max_arrows:
        raise CriterionInapplicableError(
            f"{pres.name} has {n} arrows; ray enumeration is capped at {max_arrows}"
        )

    equations = homogeneity_system(pres)
    rays: list[tuple[int, ...]] = []
    for size in range(1, n + 1):
        for support in itertools.combinations(range(n), size):
            restricted = [[row[j] for j in support] for row in equations]
            kernel = integer_kernel(restricted, size)
            if kernel.rank != 1:
                continue
            generator = kernel.basis[0]
            if any(x == 0 for x in generator):
                continue
            if all(x < 0 for x in generator):
                generator = tuple(-x for x in generator)
            elif not all(x > 0 for x in generator):
                continue
            ray = [0] * n
            for j, x in zip(support, generator):
                ray[j] = x
            rays.append(tuple(primitive(ray)))
    logger.debug("Extreme rays", extra={"algebra": pres.name, "rays": len(rays)})
    return rays


def positive_grading_exists(
    pres: AlgebraPresentation, max_arrows: Optional[int] = None
) -> Optional[DegreeAssignment]:
    """
    A nonzero homogeneous grading with nonnegative arrow degrees, or None.

    The witness is the primitive sum of all extreme rays, so every arrow that
    can be positive in some positive grading is positive in the witness.

    Example:
        >>> positive_grading_exists(make_block(BlockId("D2A", 2, 1))).as_dict()
        {'alpha': 1, 'beta': 0, 'gamma': 0}
    """
    rays = extreme_rays(pres, max_arrows)
    if not rays:
        return None
    total = [sum(column) for column in zip(*rays)]
    return DegreeAssignment.from_vector(pres.quiver, primitive(total))


def negative_cycles(pres: AlgebraPresentation, deg: DegreeAssignment) -> list[tuple[str, ...]]:
    """
    Oriented cycles (as arrow words) whose total degree is negative.

    Cycle degrees are unchanged by morita_shift, so any such cycle shows that
    no shift of deg is nonnegative.
    """
    quiver = pres.quiver
    simple = nx.DiGraph()
    simple.add_nodes_from(quiver.vertices)
    simple.add_edges_from((a.source, a.target) for a in quiver.arrows)

    found: list[tuple[str, ...]] = []
    for cycle in nx.simple_cycles(simple):
        start = min(range(len(cycle)), key=lambda i: quiver.vertex_index(cycle[i]))
        cycle = cycle[start:] + cycle[:start]
        hops = list(zip(cycle, cycle[1:] + cycle[:1]))
        choices = [[a.name for a in quiver.arrows_between(s, t)] for s, t in hops]
        for word in itertools.product(*choices):
            if sum(deg[name] for name in word) < 0:
                found.append(tuple(word))
    return sorted(found, key=lambda w: (len(w), w))


def sign_dichotomy_holds(
    pres: AlgebraPresentation, deg: DegreeAssignment, offsets: Mapping[str, int]
) -> bool:
    """
    True iff the shifted grading is negative on some arrow of every negative cycle.

    For D(2A)^{r,1} with (alpha, beta, gamma) = (r, 2 - r, 0) and r > 2 this is
    the statement: beta' >= 0 forces gamma' < 0 and gamma' >= 0 forces beta' < 0.
    """
    shifted = morita_shift(pres, deg, offsets)
    return all(any(shifted[name] < 0 for name in word) for word in negative_cycles(pres, deg))


__all__ = [
    "extreme_rays",
    "negative_cycles",
    "positive_grading_exists",
    "sign_dichotomy_holds",
]
