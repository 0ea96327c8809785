"""
The Group H_r

H_r is the set of tuples (a_1, ..., a_r) with a_1 != 0, identified with the
truncated power series f(x) = a_1 x + ... + a_r x^r. The product
hr_mul(b, a) is the series a(b(x)) mod x^(r+1):

    coordinate l = sum_i a_i * sum_{k_1 + ... + k_i = l, k_j > 0} b_{k_1} ... b_{k_i}

It is the automorphism group of k[x]/(x^(r+1)) acting on x, and it is the
unipotent-by-torus factor of the outer automorphism groups in the catalog.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from services.common.errors import AutomorphismError, FieldError
from services.quiver_core import FieldElement, GaloisField

Series = list[FieldElement]


@dataclass(frozen=True)
class HrElement:
    """
    (a_1, ..., a_r) with a_1 nonzero.

    Example:
        >>> x = HrElement.from_ints(GF2, [1, 1])
        >>> hr_mul(x, x) == HrElement.identity(GF2, 2)
        True
    """

    coordinates: tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        if not self.coordinates:
            raise AutomorphismError("H_r element needs at least one coordinate")
        fields = {c.field for c in self.coordinates}
        if len(fields) != 1:
            raise FieldError("H_r coordinates live over different fields")
        if not self.coordinates[0]:
            raise AutomorphismError("First H_r coordinate must be nonzero")

    @classmethod
    def from_ints(cls, field: GaloisField, values: Sequence[int]) -> HrElement:
        return cls(tuple(field(v) for v in values))

    @classmethod
    def identity(cls, field: GaloisField, r: int) -> HrElement:
        return cls.from_ints(field, [1] + [0] * (r - 1))

    @classmethod
    def random(cls, field: GaloisField, r: int, rng: random.Random) -> HrElement:
        return cls(
            (field.random_element(rng, nonzero=True),)
            + tuple(field.random_element(rng) for _ in range(r - 1))
        )

    @property
    def r(self) -> int:
        return len(self.coordinates)

    @property
    def field(self) -> GaloisField:
        return self.coordinates[0].field

    def is_identity(self) -> bool:
        return self.coordinates[0] == 1 and not any(self.coordinates[1:])

    def as_ints(self) -> list[int]:
        return [int(c) for c in self.coordinates]

    def __str__(self) -> str:
        return "(" + ", ".join(str(int(c)) for c in self.coordinates) + ")"


def _series_mul(f: Series, g: Series, r: int) -> Series:
    """Product of series indexed from x^0, truncated after x^r."""
    field = f[0].field
    out = [field.zero] * (r + 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j in range(r + 1 - i):
            if g[j]:
                out[i + j] = out[i + j] + a * g[j]
    return out


def substitute(outer: Sequence[FieldElement], inner: Sequence[FieldElement], r: int) -> Series:
    """
    Coefficients of outer(inner(x)) mod x^(r+1), both given as (a_1, ..., a_r).

    Returns a list indexed by power, entry 0 always zero.
    """
    field = inner[0].field
    base = [field.zero] + list(inner[:r]) + [field.zero] * (r - len(inner[:r]))
    power = [field.one] + [field.zero] * r
    result = [field.zero] * (r + 1)
    for i in range(1, r + 1):
        power = _series_mul(power, base, r)
        coefficient = outer[i - 1] if i - 1 < len(outer) else field.zero
        if coefficient:
            for k in range(r + 1):
                result[k] = result[k] + coefficient * power[k]
    return result


def _check_same(beta: HrElement, alpha: HrElement) -> None:
    if beta.r != alpha.r:
        raise AutomorphismError(f"H_r elements of different length: {beta.r} and {alpha.r}")
    if beta.field is not alpha.field:
        raise FieldError(f"H_r elements over {beta.field} and {alpha.field}")


def hr_mul(beta: HrElement, alpha: HrElement) -> HrElement:
    """beta * alpha, the series alpha(beta(x))."""
    _check_same(beta, alpha)
    r = alpha.r
    return HrElement(tuple(substitute(alpha.coordinates, beta.coordinates, r)[1:]))


def hr_inverse(alpha: HrElement) -> HrElement:
    """
    The compositional inverse, solved one coordinate at a time.

    Coordinate l of alpha(g(x)) is alpha_1 g_l plus terms in g_1..g_(l-1).
    """
    r = alpha.r
    field = alpha.field
    a1 = alpha.coordinates[0]
    g = [a1.inverse()] + [field.zero] * (r - 1)
    for k in range(2, r + 1):
        partial = substitute(alpha.coordinates, g, r)
        g[k - 1] = partial[k] / a1
    return HrElement(tuple(g))


def hr_decompose(alpha: HrElement) -> tuple[HrElement, HrElement]:
    """
    alpha = hr_mul(L, K) with L = (1, a_2/a_1, ...) unipotent and K = (a_1, 0, ...) in the torus.
    """
    a1 = alpha.coordinates[0]
    unipotent = HrElement(tuple(c / a1 for c in alpha.coordinates))
    torus = HrElement((a1,) + tuple(alpha.field.zero for _ in range(alpha.r - 1)))
    return unipotent, torus


__all__ = ["HrElement", "hr_decompose", "hr_inverse", "hr_mul", "substitute"]
