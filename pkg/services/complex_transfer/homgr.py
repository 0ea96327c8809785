"""
Graded Hom in the Homotopy Category

Homgr(X, Y) is computed by finite linear algebra. A degree-0 chain map has
components f^n[i, j] in Hom(X^n_i, Y^n_j) = e_v A e_w, spanned by basis
paths; the component along a path p of degree d between P_v<s> and P_w<t>
has internal degree d - t + s. Both the chain-map condition

    f^n * dY^n = dX^n * f^(n+1)

and the null-homotopic maps f^n = dX^n * h^(n+1) + h^n * dY^(n-1) preserve
internal degree, so each internal degree is solved separately:

    dim Homgr(X, Y)_e = dim Z_e - rank(homotopy image)_e

Chain maps compose left to right like paths: f followed by g has components
sum_b f^n[a, b] * g^n[b, c].
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Iterator, Optional

from services.quiver_core import (
    AlgebraElement,
    Degree,
    DegreeAssignment,
    EchelonBasis,
    FieldElement,
    GradedVectorSpace,
    Path,
    normalize_degree,
    nullspace,
)
from services.quiver_core.graded import degree_sort_key
from services.rewrite_engine import AlgebraPresentation

from .complexes import GradedComplex, require_valid

logger = logging.getLogger(__name__)

# (position, source summand, target summand, basis path)
Coordinate = tuple[int, int, int, Path]


@dataclass(frozen=True)
class ChainMap:
    """A homogeneous chain map X -> Y; components keyed by (position, i, j)."""

    degree: Degree
    components: dict[tuple[int, int, int], AlgebraElement]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components.values())


@dataclass(frozen=True)
class ChainMapSpace:
    """
    Homgr(X, Y): chain maps modulo null-homotopic maps.

    Attributes:
        space: internal degrees of a basis
        representatives: one chain map per basis vector, in the order of space.degrees()
        cycles: dimension of the chain-map space before the quotient
        boundaries: dimension of the null-homotopic subspace
        null_homotopic: internal degree -> spanning vectors of the null-homotopic maps
    """

    space: GradedVectorSpace
    representatives: tuple[ChainMap, ...]
    cycles: int
    boundaries: int
    null_homotopic: dict[Degree, tuple[dict[Hashable, FieldElement], ...]] = field(
        default_factory=dict, compare=False
    )

    @property
    def dimension(self) -> int:
        return self.space.dimension

    def degrees(self) -> list[Degree]:
        return self.space.degrees()

    def shift_labels(self) -> list[Degree]:
        return self.space.shift_labels()

    def quotient_basis(self, pres: AlgebraPresentation, degree: Degree) -> EchelonBasis:
        """Echelon basis of the null-homotopic maps of one degree, ready to absorb more maps."""
        basis = EchelonBasis(pres.field, key=repr)
        for image in self.null_homotopic.get(degree, ()):
            basis.add(image)
        return basis


def _degree(
    pres: AlgebraPresentation,
    deg: Optional[DegreeAssignment],
    path: Path,
    source_shift: Degree,
    target_shift: Degree,
) -> Degree:
    if deg is None:
        return 0
    return normalize_degree(deg.degree_of(path) - target_shift + source_shift)


def _map_coordinates(
    pres: AlgebraPresentation,
    deg: Optional[DegreeAssignment],
    x: GradedComplex,
    y: GradedComplex,
    offset: int,
) -> Iterator[tuple[Coordinate, Degree]]:
    """Basis coordinates of maps X^n -> Y^(n + offset), with their internal degrees."""
    for n in x.positions:
        targets = y.summands(n + offset)
        for i, source in enumerate(x.summands(n)):
            for j, target in enumerate(targets):
                for path in pres.basis_paths(source.vertex, target.vertex):
                    yield (n, i, j, path), _degree(pres, deg, path, source.shift, target.shift)


def _add(
    pres: AlgebraPresentation,
    vector: dict[Hashable, FieldElement],
    key: tuple[int, int, int],
    element: AlgebraElement,
) -> None:
    for index, coefficient in pres.coordinates(element).items():
        slot = key + (index,)
        total = vector.get(slot, pres.field.zero) + coefficient
        if total:
            vector[slot] = total
        else:
            vector.pop(slot, None)


def _chain_condition(
    pres: AlgebraPresentation, x: GradedComplex, y: GradedComplex, coordinate: Coordinate
) -> dict[Hashable, FieldElement]:
    """
    Image of one basis map under f -> f^n * dY^n + dX^(n-1) * f^n.

    Keys are (n, i, k, basis index) for the X^n -> Y^(n+1) equation and
    (n - 1, h, j, basis index) for the X^(n-1) -> Y^n equation.
    """
    n, i, j, path = coordinate
    p = pres.path_element(path)
    image: dict[Hashable, FieldElement] = {}
    for (row, k), d in y.entries(n).items():
        if row == j:
            _add(pres, image, (n, i, k), pres.multiply(p, d))
    for (h, col), d in x.entries(n - 1).items():
        if col == i:
            _add(pres, image, (n - 1, h, j), pres.multiply(d, p))
    return image


def _homotopy_image(
    pres: AlgebraPresentation, x: GradedComplex, y: GradedComplex, coordinate: Coordinate
) -> dict[Hashable, FieldElement]:
    """
    Null-homotopic map of one basis homotopy h : X^n -> Y^(n-1), as map coordinates.

    h contributes h * dY^(n-1) to f^n and dX^(n-1) * h to f^(n-1).
    """
    n, i, j, path = coordinate
    p = pres.path_element(path)
    image: dict[Hashable, FieldElement] = {}
    for (row, k), d in y.entries(n - 1).items():
        if row == j:
            _add(pres, image, (n, i, k), pres.multiply(p, d))
    for (h, col), d in x.entries(n - 1).items():
        if col == i:
            _add(pres, image, (n - 1, h, j), pres.multiply(d, p))
    return image


def _to_chain_map(
    pres: AlgebraPresentation, degree: Degree, vector: dict[Hashable, FieldElement]
) -> ChainMap:
    components: dict[tuple[int, int, int], AlgebraElement] = defaultdict(pres.zero)
    for (n, i, j, index), coefficient in vector.items():
        components[(n, i, j)] = components[(n, i, j)] + pres.path_element(pres.basis[index], coefficient)
    return ChainMap(degree, dict(components))


def chain_map_vector(pres: AlgebraPresentation, f: ChainMap) -> dict[Hashable, FieldElement]:
    """Coordinates of f, keyed (position, i, j, basis index) as in homgr."""
    vector: dict[Hashable, FieldElement] = {}
    for key, element in f.components.items():
        _add(pres, vector, key, element)
    return vector


def compose_chain_maps(pres: AlgebraPresentation, f: ChainMap, g: ChainMap) -> ChainMap:
    """f : X -> Y followed by g : Y -> Z."""
    components: dict[tuple[int, int, int], AlgebraElement] = defaultdict(pres.zero)
    for (n, a, b), left in f.components.items():
        for (m, b2, c), right in g.components.items():
            if m == n and b2 == b:
                components[(n, a, c)] = components[(n, a, c)] + pres.multiply(left, right)
    return ChainMap(normalize_degree(f.degree + g.degree), dict(components))


def add_chain_maps(f: ChainMap, g: ChainMap, scalar: FieldElement) -> ChainMap:
    """f + scalar * g, for maps of the same degree."""
    components = dict(f.components)
    for key, element in g.components.items():
        scaled = element.scale(scalar)
        components[key] = components[key] + scaled if key in components else scaled
    return ChainMap(f.degree, components)


def homgr(
    x: GradedComplex,
    y: GradedComplex,
    pres: AlgebraPresentation,
    deg: Optional[DegreeAssignment] = None,
) -> ChainMapSpace:
    """
    Graded Hom from x to y in the homotopy category.

    Args:
        x: source complex
        y: target complex
        pres: the algebra
        deg: grading; None gives every map internal degree 0

    Returns:
        the internal degrees of a basis of Homgr(x, y) with representatives

    Raises:
        ComplexError: if either complex is invalid for deg
    """
    require_valid(x, pres, deg)
    require_valid(y, pres, deg)

    maps: dict[Degree, list[Coordinate]] = defaultdict(list)
    for coordinate, degree in _map_coordinates(pres, deg, x, y, 0):
        maps[degree].append(coordinate)
    homotopies: dict[Degree, list[Coordinate]] = defaultdict(list)
    for coordinate, degree in _map_coordinates(pres, deg, x, y, -1):
        homotopies[degree].append(coordinate)

    degrees: list[Degree] = []
    representatives: list[ChainMap] = []
    null_homotopic: dict[Degree, tuple[dict[Hashable, FieldElement], ...]] = {}
    cycles = boundaries = 0
    for degree in sorted(maps, key=degree_sort_key):
        columns = {c: _chain_condition(pres, x, y, c) for c in maps[degree]}
        kernel = nullspace(columns, pres.field)
        if not kernel:
            continue
        quotient = EchelonBasis(pres.field, key=repr)
        for h in homotopies.get(degree, []):
            image = _homotopy_image(pres, x, y, h)
            if image:
                quotient.add(image)
        null_homotopic[degree] = tuple(quotient.rows())
        boundaries += quotient.rank
        cycles += len(kernel)
        for coordinates in kernel:
            vector = {c[:3] + (pres.basis_index(c[3]),): v for c, v in coordinates.items()}
            if quotient.add(vector):
                degrees.append(degree)
                representatives.append(_to_chain_map(pres, degree, vector))

    logger.debug(
        "Computed graded Hom",
        extra={"source": x.name, "target": y.name, "cycles": cycles, "boundaries": boundaries},
    )
    return ChainMapSpace(
        GradedVectorSpace(degrees), tuple(representatives), cycles, boundaries, null_homotopic
    )


__all__ = [
    "ChainMap",
    "ChainMapSpace",
    "add_chain_maps",
    "chain_map_vector",
    "compose_chain_maps",
    "homgr",
]
