"""
Homogeneity Lattice

A degree assignment is homogeneous when every relation equates monomials of
equal degree. The homogeneous assignments form a lattice H in Z^arrows; the
assignments obtained by shifting projectives P_v<n_v> form the coboundary
sublattice B. Gradings up to graded Morita equivalence are classes in H / B.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from services.common.errors import InhomogeneousGradingError
from services.quiver_core import DegreeAssignment, Path, Quiver
from services.rewrite_engine import AlgebraPresentation

from .lattice import IntegerKernel, diagonalize, integer_kernel, mat_vec

logger = logging.getLogger(__name__)


def _arrow_content(quiver: Quiver, path: Path) -> list[int]:
    counts = Counter(path.arrows)
    return [counts.get(name, 0) for name in quiver.arrow_names]


def homogeneity_system(pres: AlgebraPresentation) -> list[tuple[int, ...]]:
    """
    Integer equations (rows over the arrow order) cutting out H.

    Each relation contributes content(m) - content(m_0) for every monomial m
    after the first; zero rows and duplicates are dropped, so monomial
    relations and binomials with equal arrow content add nothing.
    """
    quiver = pres.quiver
    rows: list[tuple[int, ...]] = []
    for relation in pres.relations:
        paths = relation.element().paths()
        if len(paths) < 2:
            continue
        base = _arrow_content(quiver, paths[0])
        for path in paths[1:]:
            row = tuple(x - y for x, y in zip(_arrow_content(quiver, path), base))
            if any(row) and row not in rows and tuple(-x for x in row) not in rows:
                rows.append(row)
    return rows


def coboundary_vector(quiver: Quiver, vertex: str) -> tuple[int, ...]:
    """The shift of P_vertex by one: arrows out of vertex gain 1, arrows into it lose 1."""
    return tuple(
        int(arrow.source == vertex) - int(arrow.target == vertex) for arrow in quiver.arrows
    )


@dataclass(frozen=True)
class GradingLattice:
    """
    H, B and the quotient H / B for one presentation.

    Attributes:
        arrows: arrow order of all vectors
        equations: the homogeneity system
        kernel: saturated basis of H with coordinate map
        coboundaries: generators of B, one per vertex
        u, u_inverse: row transform diagonalizing B in H-coordinates
        diagonal: nonzero diagonal entries; entries > 1 are torsion
    """

    arrows: tuple[str, ...]
    equations: tuple[tuple[int, ...], ...]
    kernel: IntegerKernel
    coboundaries: tuple[tuple[int, ...], ...]
    u: tuple[tuple[int, ...], ...]
    u_inverse: tuple[tuple[int, ...], ...]
    diagonal: tuple[int, ...]

    @property
    def rank_h(self) -> int:
        return self.kernel.rank

    @property
    def rank_b(self) -> int:
        return len(self.diagonal)

    @property
    def rank(self) -> int:
        """rank(H / B)."""
        return self.rank_h - self.rank_b

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)

    def basis(self) -> list[tuple[int, ...]]:
        return list(self.kernel.basis)

    def contains(self, vector: Sequence[int]) -> bool:
        return all(sum(a * b for a, b in zip(row, vector)) == 0 for row in self.equations)

    def classify(self, vector: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """
        Canonical (free, torsion) coordinates of the class of vector in H / B.

        Raises:
            InhomogeneousGradingError: if vector is not in H
        """
        if len(vector) != len(self.arrows) or not self.contains(vector):
            raise InhomogeneousGradingError(f"{list(vector)} is not a homogeneous grading")
        z = mat_vec(self.u, self.kernel.coordinates(vector))
        s = self.rank_b
        torsion = tuple(z[i] % d for i, d in enumerate(self.diagonal) if d > 1)
        return tuple(z[s:]), torsion

    def representative(self, free: Sequence[int]) -> tuple[int, ...]:
        """An assignment in H whose class has the given free coordinates and no torsion."""
        if len(free) != self.rank:
            raise ValueError(f"Expected {self.rank} free coordinates, got {len(free)}")
        z = [0] * self.rank_b + list(free)
        y = mat_vec(self.u_inverse, z)
        return tuple(
            sum(c * b[i] for c, b in zip(y, self.kernel.basis)) for i in range(len(self.arrows))
        )

    def same_class(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return self.classify(x) == self.classify(y)


def grading_lattice(pres: AlgebraPresentation) -> GradingLattice:
    """
    Solve the homogeneity system and diagonalize the coboundaries inside it.

    Example:
        >>> grading_lattice(make_block(BlockId("A", 2))).rank
        2
    """
    quiver = pres.quiver
    n = len(quiver.arrows)
    equations = homogeneity_system(pres)
    kernel = integer_kernel(equations, n)
    coboundaries = tuple(coboundary_vector(quiver, v) for v in quiver.vertices)

    # columns: coboundaries written in H coordinates
    columns = [kernel.coordinates(b) for b in coboundaries]
    h = kernel.rank
    matrix = [[columns[j][i] for j in range(len(columns))] for i in range(h)]
    diag = diagonalize(matrix, h, len(columns))

    lattice = GradingLattice(
        arrows=quiver.arrow_names,
        equations=tuple(equations),
        kernel=kernel,
        coboundaries=coboundaries,
        u=diag.u,
        u_inverse=diag.u_inverse,
        diagonal=diag.diagonal,
    )
    logger.debug(
        "Grading lattice",
        extra={"algebra": pres.name, "rank_h": lattice.rank_h, "rank": lattice.rank},
    )
    return lattice


def is_homogeneous(pres: AlgebraPresentation, deg: DegreeAssignment) -> bool:
    return all(relation.is_homogeneous_under(deg) for relation in pres.relations)


def rescale(deg: DegreeAssignment, factor: int) -> DegreeAssignment:
    """Multiply every arrow degree by a nonzero integer."""
    if factor == 0:
        raise ValueError("Rescaling factor must be nonzero")
    return DegreeAssignment(deg.arrows, {a: factor * d for a, d in deg.items()})


def morita_shift(
    pres: AlgebraPresentation, deg: DegreeAssignment, offsets: Mapping[str, int]
) -> DegreeAssignment:
    """
    Grading of End(sum of P_v<n_v>): arrow a: i -> j gets deg(a) + n_i - n_j.

    Vertices missing from offsets keep offset 0.
    """
    quiver = pres.quiver
    for vertex in offsets:
        quiver.vertex_index(vertex)
    return DegreeAssignment(
        deg.arrows,
        {
            arrow.name: deg[arrow.name]
            + offsets.get(arrow.source, 0)
            - offsets.get(arrow.target, 0)
            for arrow in quiver.arrows
        },
    )


def require_homogeneous(pres: AlgebraPresentation, deg: DegreeAssignment) -> None:
    for relation in pres.relations:
        if not relation.is_homogeneous_under(deg):
            raise InhomogeneousGradingError(
                f"Grading is not homogeneous for relation {relation.describe()}"
            )


__all__ = [
    "GradingLattice",
    "coboundary_vector",
    "grading_lattice",
    "homogeneity_system",
    "is_homogeneous",
    "morita_shift",
    "require_homogeneous",
    "rescale",
]
