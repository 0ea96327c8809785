"""
Normalized Outer Automorphisms

Each supported family has explicit coordinates on Out^K (automorphisms
fixing the vertices, modulo inner ones):

* C_r: an automorphism is conjugate to the diagonal map
  a1, a2, b1, b2 -> alpha_1 a1, alpha_2 a2, alpha_3 b1, alpha_4 b2 and
  c -> sum gamma_i c^i with alpha_1 alpha_2 alpha_3 alpha_4 = gamma_1^r.
  Diagonal inner automorphisms act on (alpha_1, alpha_2, alpha_3) by
  (w, v, w^-1), so the class is (alpha_1 alpha_3, gamma).
* D(2B)^{r,c}: conjugate to gamma -> gamma, beta -> v beta,
  alpha -> a1 alpha + a2 beta*gamma + a3 alpha*beta*gamma, eta -> sum d_i eta^i,
  with a1 v = d_1^r. For c = 1 also a1 = v, so v = sqrt(d_1^r).
* D(1C): the action on rad / rad^2 is a diagonal or antidiagonal 2x2 matrix.

normalize_outer reads these coordinates after composing with the explicit
inner automorphisms, then rebuilds the normalized map with lift and checks
that it agrees, so a wrong reading fails loudly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from services.common.errors import AutomorphismError
from services.quiver_core import AlgebraElement, FieldElement, GaloisField
from services.rewrite_engine import AlgebraPresentation

from .automorphisms import Endomorphism, automorphism_defects, compose, inner
from .hr_group import HrElement, hr_mul

logger = logging.getLogger(__name__)

NORMALIZABLE_FAMILIES = ("C", "D2B", "D1C")

SCALAR_NAMES: dict[tuple[str, Optional[int]], tuple[str, ...]] = {
    ("C", None): ("alpha_1*alpha_3",),
    ("D2B", 0): ("a2", "a3", "v"),
    ("D2B", 1): ("a2", "a3"),
    ("D1C", None): ("m11", "m12", "m21", "m22"),
}
SERIES_NAMES = {"C": "gamma", "D2B": "d"}


@dataclass(frozen=True)
class OuterTuple:
    """
    Normalized coordinates of a class in Out^K.

    Attributes:
        family: "C", "D2B" or "D1C"
        r: block parameter
        c: D2B scalar, else None
        scalars: C: (alpha_1 * alpha_3,); D2B c=0: (a2, a3, v); D2B c=1: (a2, a3);
            D1C: the rad/rad^2 matrix rows (m11, m12, m21, m22)
        series: H_r part (gamma for C, d for D2B); None for D1C
        antidiagonal: D1C only, the map swaps alpha and beta modulo rad^2
    """

    family: str
    r: int
    c: Optional[int]
    scalars: tuple[FieldElement, ...]
    series: Optional[HrElement] = None
    antidiagonal: bool = False

    @property
    def field(self) -> GaloisField:
        return self.scalars[0].field if self.scalars else self.series.field

    def as_ints(self) -> dict[str, object]:
        data: dict[str, object] = {
            "family": self.family,
            "r": self.r,
            "scalars": [int(s) for s in self.scalars],
        }
        if self.c is not None:
            data["c"] = self.c
        if self.series is not None:
            data["series"] = self.series.as_ints()
        if self.family == "D1C":
            data["antidiagonal"] = self.antidiagonal
        return data

    def named_coordinates(self) -> list[tuple[str, FieldElement]]:
        """Scalars then series coordinates, with their names."""
        pairs = list(zip(SCALAR_NAMES[(self.family, self.c)], self.scalars))
        if self.series is not None:
            prefix = SERIES_NAMES[self.family]
            pairs += [
                (f"{prefix}_{i}", x) for i, x in enumerate(self.series.coordinates, start=1)
            ]
        return pairs


def _family_of(pres: AlgebraPresentation) -> tuple[str, int, Optional[int]]:
    block = pres.block
    if block is None:
        raise AutomorphismError(f"{pres.name} is not a catalog block")
    if block.family not in NORMALIZABLE_FAMILIES:
        raise AutomorphismError(
            f"No normalized coordinates for family {block.family}; "
            f"use a derived-equivalent block in {', '.join(NORMALIZABLE_FAMILIES)}"
        )
    return block.family, block.r, block.c


def _coefficient(pres: AlgebraPresentation, element: AlgebraElement, *word: str) -> FieldElement:
    """Coefficient in element of the basis path representing the word."""
    reduced = pres.element(*word)
    if len(reduced) != 1:
        raise AutomorphismError(f"{'*'.join(word)} is not a single basis path in {pres.name}")
    path, scale = next(iter(reduced.items()))
    return element.coefficient(path) / scale


def _series_image(pres: AlgebraPresentation, name: str, coefficients: HrElement) -> AlgebraElement:
    total = pres.zero()
    for power, coefficient in enumerate(coefficients.coordinates, start=1):
        if coefficient:
            total = total + pres.element(*([name] * power)).scale(coefficient)
    return total


def _read_series(pres: AlgebraPresentation, element: AlgebraElement, name: str, r: int) -> HrElement:
    coordinates = tuple(_coefficient(pres, element, *([name] * power)) for power in range(1, r + 1))
    if not coordinates[0]:
        raise AutomorphismError(f"Linear coefficient of {name} vanishes; not an automorphism")
    return HrElement(coordinates)


def _require_automorphism(phi: Endomorphism) -> None:
    if not phi.fixes_vertices():
        raise AutomorphismError("Normalization needs an automorphism fixing the vertex idempotents")
    defects = automorphism_defects(phi)
    if defects:
        raise AutomorphismError(f"Not an automorphism: {defects[0]}")


def _verify_lift(
    pres: AlgebraPresentation,
    normalized: Endomorphism,
    data: OuterTuple,
    generators: tuple[str, ...],
) -> None:
    rebuilt = lift(pres, data)
    for name in generators:
        if rebuilt.arrow_images[name] != normalized.arrow_images[name]:
            raise AutomorphismError(
                f"Normalized image of {name} is {normalized.arrow_images[name]}, "
                f"expected {rebuilt.arrow_images[name]}"
            )


def _normalize_c(pres: AlgebraPresentation, phi: Endomorphism, r: int) -> OuterTuple:
    field = pres.field
    image = phi.arrow_images
    alpha2 = _coefficient(pres, image["a2"], "a2")
    alpha3 = _coefficient(pres, image["b1"], "b1")
    if not alpha2 or not alpha3:
        raise AutomorphismError("Linear coefficients of a2 and b1 must be nonzero")
    beta2 = _coefficient(pres, image["a2"], "b1", "a1", "a2")
    beta3 = _coefficient(pres, image["b1"], "a2", "b2", "b1")

    unit = (
        pres.one()
        + pres.element("b1", "a1").scale(beta2 / alpha2)
        + pres.element("a2", "b2").scale(beta3 / alpha3)
    )
    phi1 = compose(inner(pres, unit), phi)

    diagonal = [_coefficient(pres, phi1.arrow_images[a], a) for a in ("a1", "a2", "b1", "b2")]
    gamma = _read_series(pres, phi1.arrow_images["c"], "c", r)
    product = diagonal[0] * diagonal[1] * diagonal[2] * diagonal[3]
    if product != gamma.coordinates[0] ** r:
        raise AutomorphismError("alpha_1 alpha_2 alpha_3 alpha_4 differs from gamma_1^r")

    # conjugate by the diagonal unit with w = alpha_1^-1, v = alpha_2^-1
    w = diagonal[0].inverse()
    v = diagonal[1].inverse()
    l2 = field.one
    l1 = w * l2
    l3 = l2 / v
    scaling = pres.vertex("1").scale(l1) + pres.vertex("2").scale(l2) + pres.vertex("3").scale(l3)
    phi2 = compose(inner(pres, scaling), phi1)

    data = OuterTuple("C", r, None, (diagonal[0] * diagonal[2],), gamma)
    _verify_lift(pres, phi2, data, pres.quiver.arrow_names)
    return data


def _normalize_d2b(pres: AlgebraPresentation, phi: Endomorphism, r: int, c: int) -> OuterTuple:
    image = phi.arrow_images
    c1 = _coefficient(pres, image["gamma"], "gamma")
    if not c1:
        raise AutomorphismError("Linear coefficient of gamma vanishes; not an automorphism")
    c2 = _coefficient(pres, image["gamma"], "gamma", "alpha")

    unit = pres.one() + pres.arrow("alpha").scale(c2 / c1)
    phi1 = compose(inner(pres, unit), phi)
    scaling = pres.vertex("0") + pres.vertex("1").scale(c1.inverse())
    phi2 = compose(inner(pres, scaling), phi1)

    alpha_image = phi2.arrow_images["alpha"]
    a2 = _coefficient(pres, alpha_image, "beta", "gamma")
    a3 = _coefficient(pres, alpha_image, "alpha", "beta", "gamma")
    v = _coefficient(pres, phi2.arrow_images["beta"], "beta")
    d = _read_series(pres, phi2.arrow_images["eta"], "eta", r)
    if not v:
        raise AutomorphismError("Linear coefficient of beta vanishes; not an automorphism")

    scalars = (a2, a3, v) if c == 0 else (a2, a3)
    data = OuterTuple("D2B", r, c, scalars, d)
    _verify_lift(pres, phi2, data, pres.quiver.arrow_names)
    return data


def _normalize_d1c(pres: AlgebraPresentation, phi: Endomorphism, r: int) -> OuterTuple:
    image = phi.arrow_images
    m11 = _coefficient(pres, image["alpha"], "alpha")
    m12 = _coefficient(pres, image["alpha"], "beta")
    m21 = _coefficient(pres, image["beta"], "alpha")
    m22 = _coefficient(pres, image["beta"], "beta")
    if m11 and m22 and not m12 and not m21:
        antidiagonal = False
    elif m12 and m21 and not m11 and not m22:
        antidiagonal = True
    else:
        raise AutomorphismError("Action on rad/rad^2 is neither diagonal nor antidiagonal")
    return OuterTuple("D1C", r, None, (m11, m12, m21, m22), None, antidiagonal)


def normalize_outer(pres: AlgebraPresentation, phi: Endomorphism) -> OuterTuple:
    """
    Normalized coordinates of the outer class of phi.

    Args:
        pres: a C, D2B or D1C catalog block
        phi: an automorphism of pres fixing the vertices

    Raises:
        AutomorphismError: phi moves vertices, is not an automorphism, or the
            family has no normalized coordinates

    Example:
        >>> normalize_outer(pres, identity(pres)).series.is_identity()
        True
    """
    family, r, c = _family_of(pres)
    if phi.pres is not pres:
        raise AutomorphismError("Endomorphism belongs to another algebra")
    _require_automorphism(phi)
    if family == "C":
        result = _normalize_c(pres, phi, r)
    elif family == "D2B":
        result = _normalize_d2b(pres, phi, r, c)
    else:
        result = _normalize_d1c(pres, phi, r)
    logger.debug("Normalized outer class", extra={"algebra": pres.name, "tuple": result.as_ints()})
    return result


def d2b_coefficients(data: OuterTuple) -> tuple[FieldElement, FieldElement, FieldElement, FieldElement]:
    """(a1, a2, a3, v) with a1 v = d_1^r, and v = sqrt(d_1^r) when c = 1."""
    top = data.series.coordinates[0] ** data.r
    if data.c == 0:
        a2, a3, v = data.scalars
    else:
        a2, a3 = data.scalars
        v = top.sqrt()
    return top / v, a2, a3, v


def lift(pres: AlgebraPresentation, data: OuterTuple) -> Endomorphism:
    """The normalized automorphism with the given coordinates."""
    family, r, c = _family_of(pres)
    if (data.family, data.r, data.c) != (family, r, c):
        raise AutomorphismError(f"Tuple for {data.family} does not match {pres.name}")
    if family == "C":
        product = data.scalars[0]
        gamma = data.series
        alpha4 = gamma.coordinates[0] ** r / product
        images = {
            "a1": pres.arrow("a1"),
            "a2": pres.arrow("a2"),
            "b1": pres.arrow("b1").scale(product),
            "b2": pres.arrow("b2").scale(alpha4),
            "c": _series_image(pres, "c", gamma),
        }
    elif family == "D2B":
        a1, a2, a3, v = d2b_coefficients(data)
        images = {
            "alpha": pres.arrow("alpha").scale(a1)
            + pres.element("beta", "gamma").scale(a2)
            + pres.element("alpha", "beta", "gamma").scale(a3),
            "beta": pres.arrow("beta").scale(v),
            "gamma": pres.arrow("gamma"),
            "eta": _series_image(pres, "eta", data.series),
        }
    else:
        m11, m12, m21, m22 = data.scalars
        images = {
            "alpha": pres.arrow("alpha").scale(m11) + pres.arrow("beta").scale(m12),
            "beta": pres.arrow("alpha").scale(m21) + pres.arrow("beta").scale(m22),
        }
    return Endomorphism.from_images(pres, images)


def outer_mul(pres: AlgebraPresentation, first: OuterTuple, second: OuterTuple) -> OuterTuple:
    """
    The class of lift(first) after lift(second).

    D2B: (a2', a3', v', d') * (a2, a3, v, d) =
    (a1 a2' + a2 v', a1 a3' + a3 d_1'^r, v v', d' then d) with a1 = d_1^r / v.

    Raises:
        AutomorphismError: tuples of different families or parameters
    """
    family, r, c = _family_of(pres)
    for data in (first, second):
        if (data.family, data.r, data.c) != (family, r, c):
            raise AutomorphismError(f"Tuple for {data.family} does not match {pres.name}")

    if family == "C":
        return OuterTuple(
            "C", r, None, (first.scalars[0] * second.scalars[0],), hr_mul(first.series, second.series)
        )
    if family == "D2B":
        _, a2p, a3p, vp = d2b_coefficients(first)
        a1, a2, a3, v = d2b_coefficients(second)
        d1p_r = first.series.coordinates[0] ** r
        series = hr_mul(first.series, second.series)
        new_a2 = a1 * a2p + a2 * vp
        new_a3 = a1 * a3p + a3 * d1p_r
        scalars = (new_a2, new_a3, v * vp) if c == 0 else (new_a2, new_a3)
        return OuterTuple("D2B", r, c, scalars, series)

    # rows are images: the matrix of first-after-second is M_second * M_first
    f11, f12, f21, f22 = first.scalars
    s11, s12, s21, s22 = second.scalars
    m = (
        s11 * f11 + s12 * f21,
        s11 * f12 + s12 * f22,
        s21 * f11 + s22 * f21,
        s21 * f12 + s22 * f22,
    )
    return OuterTuple("D1C", r, None, m, None, first.antidiagonal != second.antidiagonal)


def identity_tuple(pres: AlgebraPresentation) -> OuterTuple:
    family, r, c = _family_of(pres)
    return identity_coordinates(family, r, c, pres.field)


def identity_coordinates(
    family: str, r: int, c: Optional[int], field: GaloisField
) -> OuterTuple:
    """The class of the identity, without building the presentation."""
    if family not in NORMALIZABLE_FAMILIES:
        raise AutomorphismError(f"No normalized coordinates for family {family}")
    one = HrElement.identity(field, r)
    if family == "C":
        return OuterTuple("C", r, None, (field.one,), one)
    if family == "D2B":
        scalars = (field.zero, field.zero, field.one) if c == 0 else (field.zero, field.zero)
        return OuterTuple("D2B", r, c, scalars, one)
    return OuterTuple("D1C", r, None, (field.one, field.zero, field.zero, field.one))


__all__ = [
    "NORMALIZABLE_FAMILIES",
    "OuterTuple",
    "d2b_coefficients",
    "identity_coordinates",
    "identity_tuple",
    "lift",
    "normalize_outer",
    "outer_mul",
]
