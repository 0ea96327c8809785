"""
Algebra Endomorphisms

An endomorphism of kQ/I is given by the images of the vertex idempotents
and the arrows; paths map to products of images. Images are kept in normal
form and nothing is assumed: check_automorphism verifies the relations, the
idempotent images and bijectivity on the monomial basis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Optional

from services.common.errors import AutomorphismError, QuiverError
from services.quiver_core import AlgebraElement, FieldElement, rank
from services.rewrite_engine import AlgebraPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Endomorphism:
    """
    Generator images of an algebra map.

    Attributes:
        pres: the algebra
        vertex_images: vertex id -> image of e_v
        arrow_images: arrow name -> image of the arrow
    """

    pres: AlgebraPresentation
    vertex_images: Mapping[str, AlgebraElement]
    arrow_images: Mapping[str, AlgebraElement]

    @classmethod
    def from_images(
        cls,
        pres: AlgebraPresentation,
        arrow_images: Mapping[str, AlgebraElement],
        vertex_images: Optional[Mapping[str, AlgebraElement]] = None,
    ) -> Endomorphism:
        """
        Build from arrow images; vertices default to themselves.

        Raises:
            QuiverError: unknown generator names or images over another quiver
        """
        quiver = pres.quiver
        unknown = [name for name in arrow_images if not quiver.has_arrow(name)]
        if unknown:
            raise QuiverError(f"Unknown arrows in endomorphism: {unknown}")
        vertices = dict(vertex_images or {})
        unknown = [v for v in vertices if not quiver.has_vertex(v)]
        if unknown:
            raise QuiverError(f"Unknown vertices in endomorphism: {unknown}")
        arrows = {
            name: pres.normal_form(arrow_images.get(name, pres.arrow(name)))
            for name in quiver.arrow_names
        }
        vertex_map = {
            v: pres.normal_form(vertices.get(v, pres.vertex(v))) for v in quiver.vertices
        }
        return cls(pres, vertex_map, arrows)

    def image(self, generator: str) -> AlgebraElement:
        if generator in self.arrow_images:
            return self.arrow_images[generator]
        if generator in self.vertex_images:
            return self.vertex_images[generator]
        raise QuiverError(f"Unknown generator {generator!r}")

    def fixes_vertices(self) -> bool:
        return all(
            image == self.pres.vertex(v) for v, image in self.vertex_images.items()
        )

    def __call__(self, element: AlgebraElement) -> AlgebraElement:
        return apply(self, element)


def identity(pres: AlgebraPresentation) -> Endomorphism:
    return Endomorphism.from_images(pres, {})


def apply(phi: Endomorphism, element: AlgebraElement) -> AlgebraElement:
    """phi(element): each path goes to the product of its generator images."""
    pres = phi.pres
    total = pres.zero()
    for path, coefficient in element.items():
        if path.is_vertex:
            image = phi.vertex_images[path.source]
        else:
            image = pres.multiply(*(phi.arrow_images[name] for name in path.arrows))
        total = total + image.scale(coefficient)
    return pres.normal_form(total)


def compose(phi: Endomorphism, psi: Endomorphism) -> Endomorphism:
    """phi after psi."""
    if phi.pres is not psi.pres:
        raise AutomorphismError("Cannot compose endomorphisms of different algebras")
    return Endomorphism(
        phi.pres,
        {v: apply(phi, image) for v, image in psi.vertex_images.items()},
        {name: apply(phi, image) for name, image in psi.arrow_images.items()},
    )


def _linear_rank(phi: Endomorphism) -> int:
    pres = phi.pres
    vectors = []
    for path in pres.basis:
        image = apply(phi, pres.path_element(path))
        vectors.append(dict(image.items()))
    return rank(vectors, pres.field)


def automorphism_defects(phi: Endomorphism) -> list[str]:
    """Reasons phi is not an automorphism; empty when it is one."""
    pres = phi.pres
    defects: list[str] = []
    for relation in pres.relations:
        if not apply(phi, relation.element()).is_zero():
            defects.append(f"relation {relation.describe()} does not map to 0")

    images = phi.vertex_images
    total = pres.zero()
    for v, image in images.items():
        total = total + image
        for w, other in images.items():
            product = pres.multiply(image, other)
            expected = image if v == w else pres.zero()
            if product != expected:
                kind = "idempotent" if v == w else "orthogonal"
                defects.append(f"image of e({v}) is not {kind} against e({w})")
    if total != pres.one():
        defects.append("vertex images do not sum to 1")

    for arrow in pres.quiver.arrows:
        image = phi.arrow_images[arrow.name]
        framed = pres.multiply(images[arrow.source], image, images[arrow.target])
        if framed != image:
            defects.append(f"image of {arrow.name} does not respect its endpoints")

    if not defects:
        found = _linear_rank(phi)
        if found != pres.dimension:
            defects.append(f"linear map has rank {found} < {pres.dimension}")
    return defects


def check_automorphism(pres: AlgebraPresentation, phi: Endomorphism) -> bool:
    """
    True iff phi is an algebra automorphism of pres.

    Example:
        >>> check_automorphism(pres, identity(pres))
        True
    """
    if phi.pres is not pres:
        raise AutomorphismError("Endomorphism belongs to another algebra")
    defects = automorphism_defects(phi)
    if defects:
        logger.debug("Not an automorphism", extra={"algebra": pres.name, "defects": defects})
    return not defects


def _split_unit(pres: AlgebraPresentation, unit: AlgebraElement) -> tuple[dict[str, FieldElement], AlgebraElement]:
    """unit = sum l_v e_v + z with z in the radical."""
    scalars: dict[str, FieldElement] = {}
    radical = pres.zero()
    for path, coefficient in pres.normal_form(unit).items():
        if path.is_vertex:
            scalars[path.source] = coefficient
        else:
            radical = radical + pres.path_element(path, coefficient)
    return scalars, radical


def unit_inverse(pres: AlgebraPresentation, unit: AlgebraElement) -> AlgebraElement:
    """
    Inverse of u = D + z as sum_k (D^-1 z)^k D^-1.

    Raises:
        AutomorphismError: if some vertex coefficient of u is zero
    """
    scalars, radical = _split_unit(pres, unit)
    missing = [v for v in pres.quiver.vertices if not scalars.get(v)]
    if missing:
        raise AutomorphismError(
            f"Element is not a unit: zero coefficient at vertices {missing}"
        )
    d_inverse = pres.zero()
    for v, value in scalars.items():
        d_inverse = d_inverse + pres.vertex(v).scale(value.inverse())
    step = pres.multiply(d_inverse, radical)
    term = d_inverse
    total = d_inverse
    for _ in range(pres.dimension + 1):
        term = pres.multiply(step, term)
        if term.is_zero():
            return total
        total = total + term
    raise AutomorphismError("Radical part of the unit is not nilpotent")


def inner(pres: AlgebraPresentation, unit: AlgebraElement) -> Endomorphism:
    """Conjugation x -> u x u^-1."""
    u_inverse = unit_inverse(pres, unit)
    u = pres.normal_form(unit)
    return Endomorphism(
        pres,
        {v: pres.multiply(u, pres.vertex(v), u_inverse) for v in pres.quiver.vertices},
        {a: pres.multiply(u, pres.arrow(a), u_inverse) for a in pres.quiver.arrow_names},
    )


__all__ = [
    "Endomorphism",
    "apply",
    "automorphism_defects",
    "check_automorphism",
    "compose",
    "identity",
    "inner",
    "unit_inverse",
]
