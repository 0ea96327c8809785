"""
Tightness

An algebra is tightly graded when some grading puts the vertices in degree 0,
has a semisimple degree-0 part and is generated in degree 1. Arrows lying in
rad^2 are redundant: the other arrows already generate the algebra, so a
homogeneous assignment with degree 1 on every irredundant arrow is
sufficient. Without redundant arrows that is the all-ones vector.

For a quiver without parallel arrows, any tight grading makes each
irredundant arrow a homogeneous degree-1 element t_a = a + (terms in rad^2);
if substituting the t_a into a relation whose monomials have different
lengths reproduces the relation exactly whatever the rad^2 terms are, the
relation would equate elements of different degrees and no tight grading
exists.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from sympy import Matrix

from services.quiver_core import AlgebraElement, DegreeAssignment, EchelonBasis, Path
from services.rewrite_engine import AlgebraPresentation, Relation, radical_square_corrections

from .homogeneity import homogeneity_system

logger = logging.getLogger(__name__)

# keys of the expansion: sorted (arrow, correction index) choices; t_a is the same
# element wherever a occurs, so its coefficients are shared across positions
ExpansionKey = tuple[tuple[str, int], ...]

MAX_EXPANSION_TERMS = 50000


class Verdict(str, Enum):
    TIGHT = "tight"
    NOT_TIGHT = "not-tight"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TightnessVerdict:
    """
    Attributes:
        verdict: tight, not-tight or unknown
        witness: a tight arrow-degree grading when tight
        trace: human-readable reasons, first entry decisive
    """

    verdict: Verdict
    witness: Optional[DegreeAssignment] = None
    trace: tuple[str, ...] = field(default_factory=tuple)

    @property
    def is_tight(self) -> Optional[bool]:
        if self.verdict is Verdict.UNKNOWN:
            return None
        return self.verdict is Verdict.TIGHT


class _Corrections:
    """Bases of e_s rad^2 e_t per arrow, computed once per presentation."""

    def __init__(self, pres: AlgebraPresentation):
        self.pres = pres
        self._by_ends: dict[tuple[str, str], list[AlgebraElement]] = {}

    def for_arrow(self, name: str) -> list[AlgebraElement]:
        arrow = self.pres.quiver.arrow(name)
        key = (arrow.source, arrow.target)
        if key not in self._by_ends:
            self._by_ends[key] = radical_square_corrections(self.pres, *key)
        return self._by_ends[key]


def _redundant(pres: AlgebraPresentation, corrections: _Corrections) -> tuple[str, ...]:
    found = []
    for name in pres.quiver.arrow_names:
        basis = EchelonBasis(pres.field, key=pres.quiver.order_key)
        basis.extend(y.terms() for y in corrections.for_arrow(name))
        if basis.contains(pres.normal_form(pres.arrow(name)).terms()):
            found.append(name)
    return tuple(found)


def redundant_arrows(pres: AlgebraPresentation) -> tuple[str, ...]:
    """
    Arrows that lie in rad^2 of the algebra they present.

    Example:
        >>> redundant_arrows(make_block(BlockId("D2B", 1, 0)))
        ('eta',)
    """
    return _redundant(pres, _Corrections(pres))


def _generated_in_degree_one(
    pres: AlgebraPresentation, redundant: tuple[str, ...]
) -> Optional[DegreeAssignment]:
    """A homogeneous integer assignment with degree 1 on every irredundant arrow, or None."""
    names = pres.quiver.arrow_names
    rows = [list(row) for row in homogeneity_system(pres)]
    values = [0] * len(rows)
    for k, name in enumerate(names):
        if name not in redundant:
            rows.append([int(j == k) for j in range(len(names))])
            values.append(1)
    try:
        solution, params = Matrix(rows).gauss_jordan_solve(Matrix(values))
    except ValueError:
        return None
    solution = solution.subs({p: 0 for p in params})
    if not all(x.is_integer for x in solution):
        return None
    return DegreeAssignment.from_vector(pres.quiver, [int(x) for x in solution])


def _t_product_is_forced(
    pres: AlgebraPresentation, path: Path, corrections: _Corrections
) -> Optional[bool]:
    """
    Whether t_{a_1} ... t_{a_s} equals a_1 ... a_s for all correction coefficients.

    The product is expanded as a polynomial in the undetermined coefficients
    lambda_{a, j} of t_a = a + sum_j lambda_{a, j} y_j, one key per monomial
    (multiset of chosen corrections); it is forced iff every nonconstant
    monomial has a zero coefficient. None when the expansion is too big.
    """
    state: dict[ExpansionKey, AlgebraElement] = {(): pres.vertex(path.source)}
    for name in path.arrows:
        choices: list[tuple[Optional[tuple[str, int]], AlgebraElement]] = [(None, pres.arrow(name))]
        choices += [((name, j), y) for j, y in enumerate(corrections.for_arrow(name))]
        following: dict[ExpansionKey, AlgebraElement] = {}
        for key, element in state.items():
            for choice, factor in choices:
                product = pres.normal_form(element * factor)
                if product.is_zero():
                    continue
                new_key = key if choice is None else tuple(sorted(key + (choice,)))
                if new_key in following:
                    following[new_key] = following[new_key] + product
                else:
                    following[new_key] = product
        state = {k: v for k, v in following.items() if not v.is_zero()}
        if len(state) > MAX_EXPANSION_TERMS:
            logger.warning(
                "t-product expansion too large",
                extra={"algebra": pres.name, "terms": len(state)},
            )
            return None
    return all(key == () for key in state)


def _obstruction(
    pres: AlgebraPresentation, relation: Relation, corrections: _Corrections
) -> Optional[str]:
    element = relation.element()
    paths = element.paths()
    lengths = {p.length for p in paths}
    if len(lengths) < 2:
        return None
    for path in paths:
        if not _t_product_is_forced(pres, path, corrections):
            return None
    shortest = min(lengths)
    low = AlgebraElement(
        pres.quiver,
        pres.field,
        {p: c for p, c in element.items() if p.length == shortest},
    )
    if pres.normal_form(low).is_zero():
        return None
    left, right = relation.side_lengths()
    a = min(left) if left else 0
    b = min(right) if right else 0
    if a == b:
        a, b = shortest, max(lengths)
    return f"{relation.describe()} forces degree {a} = {b}"


def tightness(pres: AlgebraPresentation) -> TightnessVerdict:
    """
    Decide tightness where the implemented criteria certify an answer.

    Returns:
        TightnessVerdict

    Example:
        >>> tightness(make_block(BlockId("B", 2))).trace
        ('d1*c1 = (c2*d2)^2 forces degree 2 = 4',)
    """
    ones = DegreeAssignment.uniform(pres.quiver, 1)
    inhomogeneous = [rel for rel in pres.relations if not rel.is_homogeneous_under(ones)]
    if not inhomogeneous:
        return TightnessVerdict(Verdict.TIGHT, witness=ones, trace=("all arrows in degree 1",))

    corrections = _Corrections(pres)
    redundant = _redundant(pres, corrections)
    if redundant:
        witness = _generated_in_degree_one(pres, redundant)
        if witness is not None:
            forced = ", ".join(f"{name} = {witness[name]}" for name in redundant)
            reason = f"irredundant arrows in degree 1; {forced} in rad^2"
            logger.info("Tight grading", extra={"algebra": pres.name, "trace": reason})
            return TightnessVerdict(Verdict.TIGHT, witness=witness, trace=(reason,))

    if not pres.quiver.has_parallel_arrows():
        for relation in inhomogeneous:
            arrows = {name for path in relation.element().paths() for name in path.arrows}
            if arrows.intersection(redundant):
                continue
            reason = _obstruction(pres, relation, corrections)
            if reason is not None:
                logger.info("Tightness obstruction", extra={"algebra": pres.name, "trace": reason})
                return TightnessVerdict(Verdict.NOT_TIGHT, trace=(reason,))

    return TightnessVerdict(Verdict.UNKNOWN, trace=("no criterion applies",))


__all__ = ["TightnessVerdict", "Verdict", "redundant_arrows", "tightness"]
