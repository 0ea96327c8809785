"""
Relations

A relation is an identity left = right between linear combinations of
paths that all share one source and one target.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from services.common.errors import QuiverError
from services.quiver_core import AlgebraElement, DegreeAssignment, Path, degrees_equal, format_element


@dataclass(frozen=True)
class Relation:
    """
    left = right; right may be zero.

    Attributes:
        left: left-hand side
        right: right-hand side
        text: optional human form used in traces, e.g. "d1*c1 = (c2*d2)^2"
    """

    left: AlgebraElement
    right: AlgebraElement
    text: Optional[str] = None

    def __post_init__(self) -> None:
        if self.left.quiver != self.right.quiver:
            raise QuiverError("Relation sides live over different quivers")
        ends = {(p.source, p.target) for p in self.monomials()}
        if len(ends) > 1:
            described = ", ".join(f"{s}->{t}" for s, t in sorted(ends))
            raise QuiverError(f"Relation {self.describe()} is not parallel: endpoints {described}")
        if any(p.is_vertex for p in self.monomials()):
            raise QuiverError(f"Relation {self.describe()} involves a vertex idempotent")

    def element(self) -> AlgebraElement:
        """left - right, the generator of the ideal."""
        return self.left - self.right

    def monomials(self) -> list[Path]:
        """Paths occurring on either side, left side first."""
        seen: list[Path] = []
        for side in (self.left, self.right):
            for path in side.paths():
                if path not in seen:
                    seen.append(path)
        return seen

    def side_lengths(self) -> tuple[set[int], set[int]]:
        return (
            {p.length for p in self.left.paths()},
            {p.length for p in self.right.paths()},
        )

    def is_monomial(self) -> bool:
        """True for relations of the form path = 0."""
        return len(self.element()) <= 1

    def is_homogeneous_under(self, grading: DegreeAssignment) -> bool:
        paths = self.element().paths()
        if len(paths) <= 1:
            return True
        first = grading.degree_of(paths[0])
        return all(degrees_equal(first, grading.degree_of(p)) for p in paths[1:])

    def describe(self) -> str:
        if self.text:
            return self.text
        return f"{format_element(self.left)} = {format_element(self.right)}"

    def __str__(self) -> str:
        return self.describe()


__all__ = ["Relation"]
