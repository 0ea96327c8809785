"""
Graded Complexes of Projectives

A GradedComplex places shifted projectives P_v<s> at homological positions
and stores its differentials as sparse matrices: differentials[n][(i, j)]
is the map from summand i of X^n to summand j of X^(n+1), an element of
e_v A e_w acting by right multiplication.

P_v<s> has its top in degree -s, so an entry P_i<s> -> P_j<t> given by a
path of degree d is homogeneous of degree 0 iff d = t - s. Signs play no
role over characteristic 2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from services.common.errors import ComplexError, QuiverError
from services.quiver_core import AlgebraElement, Degree, DegreeAssignment, normalize_degree
from services.rewrite_engine import AlgebraPresentation

logger = logging.getLogger(__name__)

Matrix = dict[tuple[int, int], AlgebraElement]


@dataclass(frozen=True)
class Summand:
    """The shifted projective P_vertex<shift>."""

    vertex: str
    shift: Degree = 0

    def top_degree(self) -> Degree:
        return normalize_degree(-self.shift)

    def __str__(self) -> str:
        if self.shift == 0:
            return f"P{self.vertex}"
        return f"P{self.vertex}<{self.shift}>"


@dataclass
class GradedComplex:
    """
    A bounded complex of shifted indecomposable projectives.

    Attributes:
        terms: homological position -> summands at that position
        differentials: position n -> sparse matrix of d^n : X^n -> X^(n+1)
        name: display name (e.g. "T_1")
    """

    terms: dict[int, tuple[Summand, ...]]
    differentials: dict[int, Matrix] = field(default_factory=dict)
    name: str = "X"

    @classmethod
    def stalk(cls, vertex: str, shift: Degree = 0, position: int = 0, name: Optional[str] = None) -> GradedComplex:
        """P_vertex<shift> concentrated at one position."""
        return cls({position: (Summand(vertex, shift),)}, {}, name or f"P{vertex}")

    @classmethod
    def two_term(
        cls,
        sources: Sequence[tuple[Summand, AlgebraElement]],
        target: Summand,
        position: int = 0,
        name: str = "X",
    ) -> GradedComplex:
        """[sum of sources -> target] with the target at position + 1."""
        summands = tuple(summand for summand, _ in sources)
        matrix = {(i, 0): element for i, (_, element) in enumerate(sources)}
        return cls({position: summands, position + 1: (target,)}, {position: matrix}, name)

    @property
    def positions(self) -> list[int]:
        return sorted(n for n, summands in self.terms.items() if summands)

    def summands(self, position: int) -> tuple[Summand, ...]:
        return self.terms.get(position, ())

    def entry(self, position: int, i: int, j: int) -> Optional[AlgebraElement]:
        return self.differentials.get(position, {}).get((i, j))

    def entries(self, position: int) -> Matrix:
        return self.differentials.get(position, {})

    def is_stalk(self) -> bool:
        return len(self.positions) == 1 and len(self.summands(self.positions[0])) == 1

    def describe(self) -> list[str]:
        """One line per summand and per nonzero differential entry."""
        lines = [f"complex {self.name}"]
        for n in self.positions:
            for i, summand in enumerate(self.summands(n)):
                lines.append(f"  [{n}.{i}] P{summand.vertex} shift: {summand.shift}")
        for n in sorted(self.differentials):
            for (i, j), element in sorted(self.differentials[n].items()):
                if not element.is_zero():
                    lines.append(f"  d{n}: [{n}.{i}] -> [{n + 1}.{j}] by {element}")
        return lines

    def __str__(self) -> str:
        parts = []
        for n in self.positions:
            parts.append(f"{n}: " + " + ".join(str(s) for s in self.summands(n)))
        return f"{self.name} = [" + "; ".join(parts) + "]"


def _entry_violations(
    complex_: GradedComplex,
    pres: AlgebraPresentation,
    deg: Optional[DegreeAssignment],
    position: int,
    i: int,
    j: int,
    element: AlgebraElement,
) -> list[str]:
    sources = complex_.summands(position)
    targets = complex_.summands(position + 1)
    where = f"d{position}[{i},{j}]"
    if i >= len(sources) or j >= len(targets):
        return [f"{where} refers to a missing summand"]
    source, target = sources[i], targets[j]
    violations = []
    expected = normalize_degree(target.shift - source.shift)
    for path, _ in pres.normal_form(element).items():
        if path.source != source.vertex or path.target != target.vertex:
            violations.append(
                f"{where}: path {path} does not run from {source.vertex} to {target.vertex}"
            )
        elif deg is not None and normalize_degree(deg.degree_of(path) - expected) != 0:
            violations.append(
                f"{where}: path {path} has degree {deg.degree_of(path)}, expected {expected}"
            )
    return violations


def validate(
    complex_: GradedComplex, pres: AlgebraPresentation, deg: Optional[DegreeAssignment] = None
) -> list[str]:
    """
    Check framing, homogeneity and d o d = 0.

    Args:
        complex_: the complex
        pres: the algebra
        deg: grading; None checks the ungraded conditions only

    Returns:
        violations, empty when the complex is valid

    Example:
        >>> validate(GradedComplex.stalk("2"), pres, deg)
        []
    """
    violations: list[str] = []
    for summand in (s for n in complex_.positions for s in complex_.summands(n)):
        if not pres.quiver.has_vertex(summand.vertex):
            violations.append(f"unknown vertex {summand.vertex!r} in {summand}")
    if violations:
        return violations

    for n, matrix in complex_.differentials.items():
        for (i, j), element in matrix.items():
            if element.quiver != pres.quiver:
                violations.append(f"d{n}[{i},{j}] lives over another quiver")
                continue
            violations.extend(_entry_violations(complex_, pres, deg, n, i, j, element))
    if violations:
        return violations

    for n in complex_.differentials:
        first, second = complex_.entries(n), complex_.entries(n + 1)
        if not second:
            continue
        for i in range(len(complex_.summands(n))):
            for k in range(len(complex_.summands(n + 2))):
                total = pres.zero()
                for j in range(len(complex_.summands(n + 1))):
                    left, right = first.get((i, j)), second.get((j, k))
                    if left is not None and right is not None:
                        total = total + pres.multiply(left, right)
                if not pres.normal_form(total).is_zero():
                    violations.append(f"d{n + 1} o d{n} is nonzero on [{n}.{i}] -> [{n + 2}.{k}]")
    return violations


def require_valid(
    complex_: GradedComplex, pres: AlgebraPresentation, deg: Optional[DegreeAssignment] = None
) -> None:
    """
    Raises:
        ComplexError: listing every violation
    """
    try:
        violations = validate(complex_, pres, deg)
    except QuiverError as e:
        raise ComplexError(f"{complex_.name}: {e}") from e
    if violations:
        raise ComplexError(f"{complex_.name} is not a valid graded complex: " + "; ".join(violations))


__all__ = ["GradedComplex", "Matrix", "Summand", "require_valid", "validate"]
