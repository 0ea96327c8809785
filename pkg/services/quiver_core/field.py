"""
Finite Fields of Characteristic 2

GF(2^m) for 1 <= m <= 8, implemented with exponent/logarithm tables built
from a fixed primitive modulus. Elements are small immutable objects that
carry their field, so algebra elements can mix freely with Python operators
while cross-field arithmetic is rejected.

Integer literals map to elements bitwise: bit i of n is the coefficient of
x^i, so in GF(4) the literal 3 is x + 1.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, Optional, Union

from services.common.errors import FieldError

# Primitive polynomials, bit i = coefficient of x^i
PRIMITIVE_MODULI: dict[int, int] = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
}


class GaloisField:
    """
    The field GF(2^m).

    Use field_of(m) to obtain the shared instance for a degree; two elements
    are compatible iff they come from the same instance.

    Example:
        >>> gf4 = field_of(2)
        >>> x = gf4(2)
        >>> x * x == x + gf4.one
        True
    """

    def __init__(self, degree: int):
        if degree not in PRIMITIVE_MODULI:
            raise FieldError(f"Unsupported field GF(2^{degree}); degree must be in 1..8")
        self.degree = degree
        self.order = 1 << degree
        self.modulus = PRIMITIVE_MODULI[degree]

        size = self.order - 1
        self._exp = [0] * (2 * size)
        self._log = [0] * self.order
        value = 1
        for i in range(size):
            self._exp[i] = value
            self._log[value] = i
            value <<= 1
            if value & self.order:
                value ^= self.modulus
        for i in range(size, 2 * size):
            self._exp[i] = self._exp[i - size]

        self.zero = FieldElement(0, self)
        self.one = FieldElement(1, self)

    def __call__(self, value: Union[int, FieldElement]) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldError(f"Element of {value.field} used in {self}")
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise FieldError(f"Cannot interpret {value!r} as an element of {self}")
        if not 0 <= value < self.order:
            raise FieldError(f"Literal {value} out of range for {self} (0..{self.order - 1})")
        return FieldElement(value, self)

    def __repr__(self) -> str:
        return f"GF(2^{self.degree})"

    def __reduce__(self):
        return (field_of, (self.degree,))

    def elements(self) -> Iterator[FieldElement]:
        for value in range(self.order):
            yield FieldElement(value, self)

    def nonzero_elements(self) -> Iterator[FieldElement]:
        for value in range(1, self.order):
            yield FieldElement(value, self)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> FieldElement:
        low = 1 if nonzero else 0
        return FieldElement(rng.randrange(low, self.order), self)

    def generator(self) -> FieldElement:
        """The class of x, a primitive element (equal to 1 in GF(2))."""
        return FieldElement(self._exp[1 % (self.order - 1)], self)

    # Raw integer arithmetic used by FieldElement

    def _mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def _inv(self, a: int) -> int:
        if a == 0:
            raise FieldError(f"Division by zero in {self}")
        size = self.order - 1
        return self._exp[(size - self._log[a]) % size]

    def _pow(self, a: int, n: int) -> int:
        if n == 0:
            return 1
        if a == 0:
            if n < 0:
                raise FieldError(f"Division by zero in {self}")
            return 0
        size = self.order - 1
        return self._exp[(self._log[a] * n) % size]


class FieldElement:
    """An element of a GaloisField; immutable and hashable."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: GaloisField):
        self.value = value
        self.field = field

    def _coerce(self, other: object) -> Optional[int]:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldError(f"Cannot combine elements of {self.field} and {other.field}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field(other).value
        return None

    def __add__(self, other: object) -> FieldElement:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return FieldElement(self.value ^ value, self.field)

    __radd__ = __add__
    # Characteristic 2: subtraction is addition
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self) -> FieldElement:
        return self

    def __mul__(self, other: object) -> FieldElement:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return FieldElement(self.field._mul(self.value, value), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> FieldElement:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return FieldElement(self.field._mul(self.value, self.field._inv(value)), self.field)

    def __rtruediv__(self, other: object) -> FieldElement:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return FieldElement(self.field._mul(value, self.field._inv(self.value)), self.field)

    def __pow__(self, n: int) -> FieldElement:
        return FieldElement(self.field._pow(self.value, n), self.field)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field._inv(self.value), self.field)

    def sqrt(self) -> FieldElement:
        """The unique square root; Frobenius x -> x^2 is bijective on GF(2^m)."""
        root = self
        for _ in range(self.field.degree - 1):
            root = root * root
        return root

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.degree, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value}"

    def __reduce__(self):
        return (_rebuild_element, (self.field.degree, self.value))


def _rebuild_element(degree: int, value: int) -> FieldElement:
    return FieldElement(value, field_of(degree))


@lru_cache(maxsize=None)
def field_of(degree: int = 1) -> GaloisField:
    """Return the shared GF(2^degree) instance."""
    return GaloisField(degree)


GF2 = field_of(1)

__all__ = ["GF2", "PRIMITIVE_MODULI", "FieldElement", "GaloisField", "field_of"]
