"""
Grading Transfer

A homogeneous grading on the source block makes T a graded tilting complex,
and the graded endomorphism ring of T is the target block with an induced
grading. Target arrows i -> j are the irreducible maps T_i -> T_j, so their
degrees are the degrees of rad / rad^2 of End(T) between T_i and T_j:

1. rad(T_i, T_j) is Homgr(T_i, T_j) for i != j; for i = j it is the kernel
   of the residue map f -> (coefficient of e_v in f at a one-summand position);
2. rad^2(T_i, T_j) is spanned by composites T_i -> T_k -> T_j of radical maps,
   taken modulo null-homotopic maps;
3. the arrows of each vertex pair take the degrees of the quotient, and the
   result must reproduce every Hom table and be homogeneous on the target.

Assignments that only match the Hom degree multisets are reported as
alternatives. AmbiguousAssignmentError is left for vertex pairs with several
arrows of different degrees that the tables and relations cannot separate.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from services.block_catalog import BlockId, make_block
from services.common.errors import (
    AmbiguousAssignmentError,
    InhomogeneousGradingError,
    TransferError,
)
from services.grading_engine import is_homogeneous, require_homogeneous
from services.quiver_core import (
    Degree,
    DegreeAssignment,
    EchelonBasis,
    FieldElement,
    GradedVectorSpace,
    normalize_degree,
)
from services.rewrite_engine import AlgebraPresentation

from .complexes import GradedComplex
from .homgr import (
    ChainMap,
    ChainMapSpace,
    add_chain_maps,
    chain_map_vector,
    compose_chain_maps,
    homgr,
)
from .tilting import TiltingComplex, tilting_complex

logger = logging.getLogger(__name__)

Pair = tuple[str, str]


@dataclass
class TransferResult:
    """
    Outcome of a grading transfer.

    Attributes:
        edge: edge id
        source: source block
        target: target block
        grading: the induced grading on the target
        alternatives: other assignments matching the Hom degree multisets
        tables: (i, j) -> degrees of Homgr(T_i, T_j)
        irreducible: (i, j) -> degrees of rad / rad^2 of End(T) from T_i to T_j
    """

    edge: str
    source: BlockId
    target: BlockId
    grading: DegreeAssignment
    alternatives: list[DegreeAssignment] = field(default_factory=list)
    tables: dict[Pair, GradedVectorSpace] = field(default_factory=dict)
    irreducible: dict[Pair, GradedVectorSpace] = field(default_factory=dict)

    def as_dict(self) -> dict[str, int]:
        return {a: int(d) for a, d in self.grading.items()}


def hom_table(
    tilting: TiltingComplex, pres: AlgebraPresentation, deg: Optional[DegreeAssignment] = None
) -> dict[Pair, ChainMapSpace]:
    """Homgr(T_i, T_j) for every ordered pair of summands."""
    table = {}
    for i, source in sorted(tilting.summands.items()):
        for j, target in sorted(tilting.summands.items()):
            table[(i, j)] = homgr(source, target, pres, deg)
    return table


def _residue(pres: AlgebraPresentation, complex_: GradedComplex, f: ChainMap) -> FieldElement:
    """Image of an endomorphism of an indecomposable complex in the residue field."""
    for n in complex_.positions:
        summands = complex_.summands(n)
        if len(summands) == 1:
            element = f.components.get((n, 0, 0))
            if element is None:
                return pres.field.zero
            return element.coefficient(pres.quiver.vertex_path(summands[0].vertex))
    raise TransferError(f"{complex_.name} has no position with a single summand")


def radical_maps(
    tilting: TiltingComplex, pres: AlgebraPresentation, spaces: dict[Pair, ChainMapSpace]
) -> dict[Pair, list[ChainMap]]:
    """
    A basis of rad(T_i, T_j) for every pair, as chain-map representatives.

    Raises:
        TransferError: if some End(T_i) has no unit
    """
    radical: dict[Pair, list[ChainMap]] = {}
    for (i, j), space in spaces.items():
        maps = list(space.representatives)
        if i == j:
            complex_ = tilting.summands[i]
            residues = [_residue(pres, complex_, f) for f in maps]
            units = [k for k, value in enumerate(residues) if value]
            if not units:
                raise TransferError(f"End({complex_.name}) has no unit in degree 0")
            pivot = units[0]
            scale = residues[pivot].inverse()
            maps = [
                add_chain_maps(f, maps[pivot], residues[k] * scale) if residues[k] else f
                for k, f in enumerate(maps)
                if k != pivot
            ]
        radical[(i, j)] = maps
    return radical


def irreducible_maps(
    tilting: TiltingComplex, pres: AlgebraPresentation, spaces: dict[Pair, ChainMapSpace]
) -> dict[Pair, GradedVectorSpace]:
    """
    Degrees of rad / rad^2 of End(T) for every ordered pair of summands.

    Example:
        >>> irreducible_maps(tilting, a2, hom_table(tilting, a2, tight))[("1", "2")].degrees()
        [-1]
    """
    radical = radical_maps(tilting, pres, spaces)
    vertices = sorted(tilting.summands)
    result: dict[Pair, GradedVectorSpace] = {}
    for i in vertices:
        for j in vertices:
            available = Counter(f.degree for f in radical[(i, j)])
            square: Counter = Counter()
            quotients: dict[Degree, EchelonBasis] = {}
            for k in vertices:
                for f in radical[(i, k)]:
                    for g in radical[(k, j)]:
                        degree = normalize_degree(f.degree + g.degree)
                        if square[degree] >= available.get(degree, 0):
                            continue
                        if degree not in quotients:
                            quotients[degree] = spaces[(i, j)].quotient_basis(pres, degree)
                        composite = compose_chain_maps(pres, f, g)
                        if quotients[degree].add(chain_map_vector(pres, composite)):
                            square[degree] += 1
            counts = {d: n - square[d] for d, n in available.items() if n > square[d]}
            result[(i, j)] = GradedVectorSpace.from_counts(counts)
    return result


def _path_contents(target: AlgebraPresentation) -> dict[Pair, list[Counter]]:
    contents: dict[Pair, list[Counter]] = {}
    for path in target.basis:
        contents.setdefault((path.source, path.target), []).append(Counter(path.arrows))
    return contents


def _fits(
    assigned: dict[str, int],
    contents: dict[Pair, list[Counter]],
    tables: dict[Pair, GradedVectorSpace],
) -> bool:
    """Degrees of fully assigned basis paths stay within each Hom multiset."""
    for pair, paths in contents.items():
        available = tables[pair].counts()
        used: Counter = Counter()
        for arrows in paths:
            if all(a in assigned for a in arrows):
                used[sum(n * assigned[a] for a, n in arrows.items())] += 1
        if any(count > available.get(d, 0) for d, count in used.items()):
            return False
    return True


def _check_dimensions(target: AlgebraPresentation, tables: dict[Pair, GradedVectorSpace]) -> None:
    contents = _path_contents(target)
    for i in target.quiver.vertices:
        for j in target.quiver.vertices:
            expected = len(contents.get((i, j), []))
            found = tables[(i, j)].dimension
            if expected != found:
                raise TransferError(
                    f"dim Homgr(T_{i}, T_{j}) = {found} but {target.name} has {expected} paths {i} -> {j}"
                )


def match_arrows(
    target: AlgebraPresentation, tables: dict[Pair, GradedVectorSpace]
) -> list[DegreeAssignment]:
    """
    All homogeneous arrow-degree assignments on target reproducing the tables.

    Raises:
        TransferError: if the ungraded dimensions disagree with the target
    """
    _check_dimensions(target, tables)
    quiver = target.quiver
    contents = _path_contents(target)
    options = {
        a.name: tables[(a.source, a.target)].distinct_degrees() for a in quiver.arrows
    }
    order = sorted(quiver.arrow_names, key=lambda a: (len(options[a]), quiver.arrow_index(a)))
    found: list[dict[str, int]] = []
    assigned: dict[str, int] = {}

    def search(k: int) -> None:
        if k == len(order):
            found.append(dict(assigned))
            return
        arrow = order[k]
        for value in options[arrow]:
            assigned[arrow] = value
            if _fits(assigned, contents, tables):
                search(k + 1)
            del assigned[arrow]

    search(0)

    matches: list[DegreeAssignment] = []
    for candidate in found:
        grading = DegreeAssignment.for_quiver(quiver, candidate)
        if grading not in matches and is_homogeneous(target, grading):
            matches.append(grading)
    return matches


def read_arrow_degrees(
    target: AlgebraPresentation,
    irreducible: dict[Pair, GradedVectorSpace],
    tables: dict[Pair, GradedVectorSpace],
) -> list[DegreeAssignment]:
    """
    Arrow-degree assignments that give each vertex pair the degrees of its irreducible maps.

    Raises:
        TransferError: if a pair has a different number of irreducible maps than arrows
    """
    _check_dimensions(target, tables)
    quiver = target.quiver
    per_pair: list[list[dict[str, int]]] = []
    for i in quiver.vertices:
        for j in quiver.vertices:
            arrows = [a.name for a in quiver.arrows_between(i, j)]
            degrees = [int(d) for d in irreducible[(i, j)].degrees()]
            if len(arrows) != len(degrees):
                raise TransferError(
                    f"{len(degrees)} irreducible maps T_{i} -> T_{j} but {target.name} "
                    f"has {len(arrows)} arrows {i} -> {j}"
                )
            if arrows:
                orders = sorted(set(itertools.permutations(degrees)))
                per_pair.append([dict(zip(arrows, order)) for order in orders])

    contents = _path_contents(target)
    matches: list[DegreeAssignment] = []
    for choice in itertools.product(*per_pair):
        assigned = {name: value for part in choice for name, value in part.items()}
        if not _fits(assigned, contents, tables):
            continue
        grading = DegreeAssignment.for_quiver(quiver, assigned)
        if is_homogeneous(target, grading):
            matches.append(grading)
    return matches


def transfer_grading(
    edge: str, pres: AlgebraPresentation, deg: DegreeAssignment
) -> TransferResult:
    """
    Move a homogeneous grading along a transfer edge.

    Args:
        edge: "A-B", "B-C" or "D2A-D2B"
        pres: source block presentation
        deg: homogeneous integer grading on pres

    Returns:
        TransferResult with the induced target grading

    Raises:
        InhomogeneousGradingError: if deg is not a homogeneous integer grading
        TransferError: unknown edge, non-catalog source or no consistent assignment
        AmbiguousAssignmentError: parallel target arrows the Hom data cannot separate

    Example:
        >>> result = transfer_grading("A-B", make_block(BlockId("A", 2)), tight)
        >>> result.as_dict()["c3"]
        9
    """
    if not deg.is_integral:
        raise InhomogeneousGradingError("Transfers need integer degrees")
    require_homogeneous(pres, deg)
    tilting = tilting_complex(edge, pres, deg)
    target = make_block(tilting.target, field=pres.field)
    spaces = hom_table(tilting, pres, deg)
    tables = {pair: space.space for pair, space in spaces.items()}
    irreducible = irreducible_maps(tilting, pres, spaces)
    key = tilting.edge.key

    matches = read_arrow_degrees(target, irreducible, tables)
    if not matches:
        raise TransferError(
            f"The irreducible maps of {key} give no homogeneous grading on {target.name}"
        )
    if len(matches) > 1:
        raise AmbiguousAssignmentError(
            f"{len(matches)} arrow-degree assignments on {target.name} are consistent",
            [m.as_dict() for m in matches],
        )
    chosen = matches[0]
    alternatives = [m for m in match_arrows(target, tables) if m != chosen]
    if alternatives:
        logger.info(
            "Hom multisets allow other assignments",
            extra={"edge": key, "alternatives": len(alternatives)},
        )

    logger.info(
        "Transferred grading",
        extra={"edge": key, "source": tilting.source.label, "target": tilting.target.label},
    )
    return TransferResult(
        key, tilting.source, tilting.target, chosen, alternatives, tables, irreducible
    )


__all__ = [
    "TransferResult",
    "hom_table",
    "irreducible_maps",
    "match_arrows",
    "radical_maps",
    "read_arrow_degrees",
    "transfer_grading",
]
