"""
Algebra Presentations

An AlgebraPresentation bundles a quiver, its relations and the completed
rewriting system, together with the monomial basis of irreducible paths.
It is the ambient object of every other computation: normal forms,
products, Hom spaces, radical layers, gradings and complexes.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Any, Iterable, Optional, Sequence, Union

from services.common.errors import NotFiniteDimensionalError, QuiverError
from services.quiver_core import (
    GF2,
    AlgebraElement,
    DegreeAssignment,
    GaloisField,
    GradedVectorSpace,
    Path,
    Quiver,
    format_path,
)

from .completion import RewriteRule, RewriteSystem, complete_rules
from .relations import Relation

logger = logging.getLogger(__name__)


class AlgebraPresentation:
    """
    A finite-dimensional bound quiver algebra kQ/I with a confluent rewriting system.

    Build instances with complete(); the constructor trusts its inputs.

    Attributes:
        quiver: the quiver
        field: coefficient field GF(2^m)
        relations: defining relations as given
        system: completed rewriting system
        basis: irreducible paths, sorted by the path order
        name: display name (e.g. "B_2")
        block: catalog identifier when built by the block catalog, else None
    """

    def __init__(
        self,
        quiver: Quiver,
        field: GaloisField,
        relations: Sequence[Relation],
        system: RewriteSystem,
        basis: Sequence[Path],
        name: Optional[str] = None,
        block: Any = None,
    ):
        self.quiver = quiver
        self.field = field
        self.relations = tuple(relations)
        self.system = system
        self.basis: tuple[Path, ...] = tuple(basis)
        self.name = name or "algebra"
        self.block = block
        self._basis_index = {p: i for i, p in enumerate(self.basis)}

    def __repr__(self) -> str:
        return f"AlgebraPresentation({self.name}, dim={self.dimension})"

    @property
    def rules(self) -> list[RewriteRule]:
        return self.system.rules

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def is_catalog(self) -> bool:
        return self.block is not None

    # Element construction

    def zero(self) -> AlgebraElement:
        return AlgebraElement.zero(self.quiver, self.field)

    def one(self) -> AlgebraElement:
        return AlgebraElement(
            self.quiver, self.field, {self.quiver.vertex_path(v): 1 for v in self.quiver.vertices}
        )

    def vertex(self, vertex: str) -> AlgebraElement:
        return AlgebraElement.from_path(self.quiver, self.field, self.quiver.vertex_path(vertex))

    def arrow(self, name: str) -> AlgebraElement:
        return AlgebraElement.from_path(self.quiver, self.field, self.quiver.arrow_path(name))

    def element(self, *names: str, coefficient: Union[int, Any] = 1) -> AlgebraElement:
        """The (reduced) element coefficient * path of the named arrows."""
        raw = AlgebraElement.from_path(self.quiver, self.field, self.quiver.path(*names), coefficient)
        return self.normal_form(raw)

    def path_element(self, path: Path, coefficient: Union[int, Any] = 1) -> AlgebraElement:
        return AlgebraElement.from_path(self.quiver, self.field, path, coefficient)

    # Arithmetic

    def normal_form(self, element: AlgebraElement) -> AlgebraElement:
        if element.quiver != self.quiver:
            raise QuiverError("Element does not live over this presentation's quiver")
        return self.system.reduce(element)

    def multiply(self, *factors: AlgebraElement) -> AlgebraElement:
        """Reduced product of the factors, reducing after every step."""
        if not factors:
            return self.one()
        result = self.normal_form(factors[0])
        for factor in factors[1:]:
            result = self.normal_form(result * factor)
            if result.is_zero():
                break
        return result

    def power(self, element: AlgebraElement, exponent: int) -> AlgebraElement:
        if exponent < 0:
            raise ValueError("Negative powers are not defined")
        return self.multiply(*([element] * exponent)) if exponent else self.one()

    def is_basis_path(self, path: Path) -> bool:
        return path in self._basis_index

    def basis_index(self, path: Path) -> int:
        return self._basis_index[path]

    def coordinates(self, element: AlgebraElement) -> dict[int, Any]:
        """Coordinates of a reduced element in the monomial basis."""
        reduced = self.normal_form(element)
        return {self._basis_index[p]: c for p, c in reduced.items()}

    # Basis queries

    def basis_paths(self, source: Optional[str] = None, target: Optional[str] = None) -> list[Path]:
        if source is not None:
            self.quiver.vertex_index(source)
        if target is not None:
            self.quiver.vertex_index(target)
        return [
            p
            for p in self.basis
            if (source is None or p.source == source) and (target is None or p.target == target)
        ]

    def hom_space(
        self, i: str, j: str, grading: Optional[DegreeAssignment] = None
    ) -> GradedVectorSpace:
        """
        Hom(P_i, P_j) as the span of basis paths from i to j.

        P_v = A e_v, and a path p from i to j acts by right multiplication
        P_i -> P_j; a path of degree d gives a homogeneous map of degree d.
        """
        paths = self.basis_paths(i, j)
        if grading is None:
            return GradedVectorSpace([0] * len(paths))
        return GradedVectorSpace(grading.degree_of(p) for p in paths)

    def cartan_matrix(self) -> dict[tuple[str, str], int]:
        """dim e_i A e_j for all vertex pairs."""
        matrix = {(i, j): 0 for i in self.quiver.vertices for j in self.quiver.vertices}
        for path in self.basis:
            matrix[(path.source, path.target)] += 1
        return matrix

    def projective_dimension(self, vertex: str) -> int:
        return len(self.basis_paths(target=vertex))


def enumerate_basis(system: RewriteSystem, max_len: int) -> list[Path]:
    """
    All irreducible paths, found breadth-first by one-arrow extensions.

    Raises:
        NotFiniteDimensionalError: if an irreducible path of length max_len exists
    """
    quiver = system.quiver
    outgoing: dict[str, list[str]] = {v: [] for v in quiver.vertices}
    for arrow in quiver.arrows:
        outgoing[arrow.source].append(arrow.name)

    found: list[Path] = []
    queue: deque[Path] = deque(quiver.vertex_path(v) for v in quiver.vertices)
    while queue:
        path = queue.popleft()
        found.append(path)
        for name in outgoing[path.target]:
            extended = Path(path.source, quiver.arrow(name).target, path.arrows + (name,))
            if system.has_suffix_match(extended):
                continue
            if extended.length >= max_len:
                raise NotFiniteDimensionalError(
                    f"Irreducible path {format_path(extended)} reaches length {max_len}; "
                    "not finite-dimensional within bound",
                    witness=extended,
                )
            queue.append(extended)
    return sorted(found, key=quiver.order_key)


def complete(
    quiver: Quiver,
    relations: Iterable[Relation],
    max_len: int,
    field: GaloisField = GF2,
    max_rules: int = 5000,
    name: Optional[str] = None,
    block: Any = None,
) -> AlgebraPresentation:
    """
    Complete quiver + relations into a finite-dimensional presentation.

    Args:
        quiver: the quiver
        relations: parallel relations over the quiver
        max_len: saturation guard for leading paths and irreducible paths
        field: coefficient field (default GF(2))
        max_rules: cap on rule count during completion
        name: display name
        block: catalog identifier, if any

    Returns:
        AlgebraPresentation with basis and dimension

    Raises:
        QuiverError: relations over another quiver
        NotFiniteDimensionalError: guard exceeded, with the witness path

    Example:
        >>> pres = complete(quiver, relations, max_len=16)
        >>> pres.dimension
        18
    """
    relations = list(relations)
    for relation in relations:
        if relation.left.quiver != quiver:
            raise QuiverError(f"Relation {relation} is not over the given quiver")
        if relation.left.field is not field:
            raise QuiverError(f"Relation {relation} is not over {field}")
    if max_len < 1:
        raise ValueError("max_len must be positive")

    system = complete_rules(quiver, field, relations, max_len=max_len, max_rules=max_rules)
    basis = enumerate_basis(system, max_len)
    presentation = AlgebraPresentation(quiver, field, relations, system, basis, name=name, block=block)
    logger.info(
        "Built presentation",
        extra={"algebra": presentation.name, "dim": presentation.dimension, "rules": len(system)},
    )
    return presentation


def dimension(pres: AlgebraPresentation) -> int:
    return pres.dimension


def normal_form(element: AlgebraElement, pres: AlgebraPresentation) -> AlgebraElement:
    return pres.normal_form(element)


def hom_space(
    pres: AlgebraPresentation, i: str, j: str, grading: Optional[DegreeAssignment] = None
) -> GradedVectorSpace:
    return pres.hom_space(i, j, grading)


__all__ = [
    "AlgebraPresentation",
    "complete",
    "dimension",
    "enumerate_basis",
    "hom_space",
    "normal_form",
]
