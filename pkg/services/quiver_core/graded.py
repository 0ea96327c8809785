"""
Graded Data Model

DegreeAssignment attaches a degree to every arrow (vertices sit in degree 0);
the degree of a path is the sum over its arrows. Degrees are integers for
lattice work, or sympy expressions when layer tables are computed with
symbolic arrow degrees.

GradedVectorSpace is a finite multiset of degrees: the degrees in which its
basis vectors live. The shifted one-dimensional space k<s> sits in degree -s,
so shift_labels() gives back the s of each summand.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Mapping, Union

import sympy

from services.common.errors import QuiverError

from .quiver import Path, Quiver

Degree = Union[int, sympy.Expr]


def normalize_degree(value: Degree) -> Degree:
    """Collapse sympy numbers to int and expand affine expressions to canonical form."""
    if isinstance(value, bool):
        raise TypeError("Boolean is not a degree")
    if isinstance(value, int):
        return value
    expr = sympy.expand(sympy.sympify(value))
    if expr.is_Integer:
        return int(expr)
    return expr


def degrees_equal(a: Degree, b: Degree) -> bool:
    if isinstance(a, int) and isinstance(b, int):
        return a == b
    return sympy.expand(sympy.sympify(a) - sympy.sympify(b)) == 0


def degree_sort_key(value: Degree) -> tuple[int, Union[int, str]]:
    if isinstance(value, int):
        return (0, value)
    return (1, str(value))


class DegreeAssignment(Mapping[str, Degree]):
    """
    Immutable map arrow name -> degree over a fixed arrow order.

    Example:
        >>> deg = DegreeAssignment.uniform(quiver, 1)
        >>> deg.degree_of(quiver.path("a1", "a2"))
        2
    """

    __slots__ = ("_arrows", "_degrees")

    def __init__(self, arrows: Iterable[str], degrees: Mapping[str, Degree]):
        self._arrows = tuple(arrows)
        missing = [a for a in self._arrows if a not in degrees]
        if missing:
            raise QuiverError(f"Degree assignment misses arrows {missing}")
        extra = [a for a in degrees if a not in self._arrows]
        if extra:
            raise QuiverError(f"Degree assignment names unknown arrows {extra}")
        self._degrees = {a: normalize_degree(degrees[a]) for a in self._arrows}

    @classmethod
    def for_quiver(cls, quiver: Quiver, degrees: Mapping[str, Degree]) -> DegreeAssignment:
        return cls(quiver.arrow_names, degrees)

    @classmethod
    def uniform(cls, quiver: Quiver, value: Degree) -> DegreeAssignment:
        return cls(quiver.arrow_names, {a: value for a in quiver.arrow_names})

    @classmethod
    def from_vector(cls, quiver: Quiver, vector: Iterable[Degree]) -> DegreeAssignment:
        values = list(vector)
        if len(values) != len(quiver.arrows):
            raise QuiverError(
                f"Degree vector has {len(values)} entries, quiver has {len(quiver.arrows)} arrows"
            )
        return cls(quiver.arrow_names, dict(zip(quiver.arrow_names, values)))

    @classmethod
    def symbolic(cls, quiver: Quiver, names: Mapping[str, str]) -> DegreeAssignment:
        """Assign a fresh sympy symbol to each arrow, e.g. {"a1": "alpha1"}."""
        return cls(quiver.arrow_names, {a: sympy.Symbol(names[a]) for a in quiver.arrow_names})

    def __getitem__(self, arrow: str) -> Degree:
        return self._degrees[arrow]

    def __iter__(self) -> Iterator[str]:
        return iter(self._arrows)

    def __len__(self) -> int:
        return len(self._arrows)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DegreeAssignment):
            return self._arrows == other._arrows and all(
                degrees_equal(self._degrees[a], other._degrees[a]) for a in self._arrows
            )
        if isinstance(other, Mapping):
            return set(other) == set(self._arrows) and all(
                degrees_equal(self._degrees[a], other[a]) for a in self._arrows
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._degrees.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{a}={d}" for a, d in self._degrees.items())
        return f"DegreeAssignment({body})"

    @property
    def arrows(self) -> tuple[str, ...]:
        return self._arrows

    @property
    def is_integral(self) -> bool:
        return all(isinstance(d, int) for d in self._degrees.values())

    def vector(self) -> tuple[Degree, ...]:
        return tuple(self._degrees[a] for a in self._arrows)

    def as_dict(self) -> dict[str, Degree]:
        return dict(self._degrees)

    def degree_of(self, path: Path) -> Degree:
        total: Degree = 0
        for arrow in path.arrows:
            total = total + self._degrees[arrow]
        return normalize_degree(total)

    def substitute(self, values: Mapping[sympy.Symbol, int]) -> DegreeAssignment:
        """Evaluate symbolic degrees at integer values."""
        return DegreeAssignment(
            self._arrows,
            {
                a: d if isinstance(d, int) else sympy.sympify(d).subs(values)
                for a, d in self._degrees.items()
            },
        )


class GradedVectorSpace:
    """
    A finite multiset of degrees.

    Example:
        >>> space = GradedVectorSpace([0, 4, 8])
        >>> space.dimension, space.shift_labels()
        (3, [-8, -4, 0])
    """

    __slots__ = ("_counts",)

    def __init__(self, degrees: Iterable[Degree] = ()):
        self._counts: Counter = Counter(normalize_degree(d) for d in degrees)

    @classmethod
    def from_counts(cls, counts: Mapping[Degree, int]) -> GradedVectorSpace:
        space = cls()
        for degree, count in counts.items():
            if count < 0:
                raise ValueError(f"Negative multiplicity {count} for degree {degree}")
            if count:
                space._counts[normalize_degree(degree)] += count
        return space

    @property
    def dimension(self) -> int:
        return sum(self._counts.values())

    def __len__(self) -> int:
        return self.dimension

    def multiplicity(self, degree: Degree) -> int:
        return self._counts.get(normalize_degree(degree), 0)

    def degrees(self) -> list[Degree]:
        """All degrees with multiplicity, sorted (integers first)."""
        result: list[Degree] = []
        for degree in sorted(self._counts, key=degree_sort_key):
            result.extend([degree] * self._counts[degree])
        return result

    def distinct_degrees(self) -> list[Degree]:
        return sorted(self._counts, key=degree_sort_key)

    def shift_labels(self) -> list[Degree]:
        """The shifts s with this space = sum of k<s>; each is minus a degree."""
        return sorted((normalize_degree(-d) for d in self.degrees()), key=degree_sort_key)

    def counts(self) -> dict[Degree, int]:
        return dict(self._counts)

    def __add__(self, other: GradedVectorSpace) -> GradedVectorSpace:
        merged = GradedVectorSpace()
        merged._counts = self._counts + other._counts
        return merged

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GradedVectorSpace):
            return +self._counts == +other._counts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __repr__(self) -> str:
        return f"GradedVectorSpace({self.degrees()})"


__all__ = [
    "Degree",
    "DegreeAssignment",
    "GradedVectorSpace",
    "degree_sort_key",
    "degrees_equal",
    "normalize_degree",
]
