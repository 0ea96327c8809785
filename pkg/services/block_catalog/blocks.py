"""
Block Constructors

The dihedral-defect families as bound quiver algebras over GF(2^m):

    A_r        a2*a1 = b2*b1 = 0, (a1*a2*b1*b2)^r = (b1*b2*a1*a2)^r
    B_r        c1*c2 = c2*c3 = c3*c1 = 0, d1*d3 = d3*d2 = d2*d1 = 0,
               c1*d1 = d3*c3, d1*c1 = (c2*d2)^r, c3*d3 = (d2*c2)^r
    C_r        a1*b1 = b2*a2 = a2*c = c*b2 = 0, c^r = b2*b1*a1*a2,
               a2*b2*b1*a1 = b1*a1*a2*b2            (C_1 is A_1)
    D2A^{r,c}  gamma*beta = 0, alpha^2 = c*(alpha*beta*gamma)^r,
               (alpha*beta*gamma)^r = (beta*gamma*alpha)^r
    D2B^{r,c}  beta*eta = eta*gamma = gamma*beta = 0,
               alpha*beta*gamma = beta*gamma*alpha, alpha^2 = c*alpha*beta*gamma,
               gamma*alpha*beta = eta^r
    D1C^r      alpha^2 = beta^2 = 0, (alpha*beta)^r = (beta*alpha)^r

Paths compose left to right.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence

from services.common.errors import InvalidBlockError
from services.common.settings import load_settings
from services.quiver_core import AlgebraElement, Arrow, GaloisField, Quiver, field_of
from services.rewrite_engine import AlgebraPresentation, Relation, complete

logger = logging.getLogger(__name__)

FAMILIES = ("A", "B", "C", "D2A", "D2B", "D1C")
FAMILIES_WITH_C = ("D2A", "D2B")


@dataclass(frozen=True)
class BlockId:
    """
    A catalog block: family, r >= 1 and, for D2A/D2B only, c in {0, 1}.

    Example:
        >>> BlockId("D2B", 3, 1).label
        'D2B^{3,1}'
    """

    family: str
    r: int
    c: Optional[int] = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidBlockError(
                f"Unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}"
            )
        if isinstance(self.r, bool) or not isinstance(self.r, int) or self.r < 1:
            raise InvalidBlockError(f"{self.family}: r must be a positive integer, got {self.r!r}")
        if self.family in FAMILIES_WITH_C:
            if self.c not in (0, 1):
                raise InvalidBlockError(f"{self.family}: c must be 0 or 1, got {self.c!r}")
        elif self.c is not None:
            raise InvalidBlockError(f"{self.family} takes no c parameter")

    @property
    def label(self) -> str:
        if self.c is None:
            return f"{self.family}_{self.r}"
        return f"{self.family}^{{{self.r},{self.c}}}"

    def canonical(self) -> BlockId:
        """C_1 is A_1."""
        if self.family == "C" and self.r == 1:
            return BlockId("A", 1)
        return self

    def __str__(self) -> str:
        return self.label


class _Builder:
    """Relation helper over a fixed quiver and field."""

    def __init__(self, quiver: Quiver, field: GaloisField):
        self.quiver = quiver
        self.field = field

    def word(self, *names: str, times: int = 1) -> AlgebraElement:
        return AlgebraElement.from_path(self.quiver, self.field, self.quiver.path(*(names * times)))

    def zero(self) -> AlgebraElement:
        return AlgebraElement.zero(self.quiver, self.field)

    def monomial(self, *names: str) -> Relation:
        return Relation(self.word(*names), self.zero())

    def equal(self, left: AlgebraElement, right: AlgebraElement) -> Relation:
        return Relation(left, right)


def _arrows(spec: Sequence[tuple[str, str, str]]) -> list[Arrow]:
    return [Arrow(name, source, target) for name, source, target in spec]


def _family_a(r: int, field: GaloisField) -> tuple[Quiver, list[Relation]]:
    quiver = Quiver(
        ["1", "2", "3"],
        _arrows([("a1", "1", "2"), ("a2", "2", "1"), ("b1", "1", "3"), ("b2", "3", "1")]),
    )
    q = _Builder(quiver, field)
    return quiver, [
        q.monomial("a2", "a1"),
        q.monomial("b2", "b1"),
        q.equal(q.word("a1", "a2", "b1", "b2", times=r), q.word("b1", "b2", "a1", "a2", times=r)),
    ]


def _family_b(r: int, field: GaloisField) -> tuple[Quiver, list[Relation]]:
    quiver = Quiver(
        ["1", "2", "3"],
        _arrows(
            [
                ("c1", "1", "2"),
                ("c2", "2", "3"),
                ("c3", "3", "1"),
                ("d1", "2", "1"),
                ("d2", "3", "2"),
                ("d3", "1", "3"),
            ]
        ),
    )
    q = _Builder(quiver, field)
    return quiver, [
        q.monomial("c1", "c2"),
        q.monomial("c2", "c3"),
        q.monomial("c3", "c1"),
        q.monomial("d1", "d3"),
        q.monomial("d3", "d2"),
        q.monomial("d2", "d1"),
        q.equal(q.word("c1", "d1"), q.word("d3", "c3")),
        q.equal(q.word("d1", "c1"), q.word("c2", "d2", times=r)),
        q.equal(q.word("c3", "d3"), q.word("d2", "c2", times=r)),
    ]


def _family_c(r: int, field: GaloisField) -> tuple[Quiver, list[Relation]]:
    quiver = Quiver(
        ["1", "2", "3"],
        _arrows(
            [
                ("a1", "1", "2"),
                ("a2", "2", "3"),
                ("b1", "2", "1"),
                ("b2", "3", "2"),
                ("c", "3", "3"),
            ]
        ),
    )
    q = _Builder(quiver, field)
    return quiver, [
        q.monomial("a1", "b1"),
        q.monomial("b2", "a2"),
        q.monomial("a2", "c"),
        q.monomial("c", "b2"),
        q.equal(q.word("c", times=r), q.word("b2", "b1", "a1", "a2")),
        q.equal(q.word("a2", "b2", "b1", "a1"), q.word("b1", "a1", "a2", "b2")),
    ]


def _family_d2a(r: int, c: int, field: GaloisField) -> tuple[Quiver, list[Relation]]:
    quiver = Quiver(
        ["0", "1"],
        _arrows([("alpha", "0", "0"), ("beta", "0", "1"), ("gamma", "1", "0")]),
    )
    q = _Builder(quiver, field)
    cycle = q.word("alpha", "beta", "gamma", times=r)
    return quiver, [
        q.monomial("gamma", "beta"),
        q.equal(q.word("alpha", "alpha"), cycle.scale(c)),
        q.equal(cycle, q.word("beta", "gamma", "alpha", times=r)),
    ]


def _family_d2b(r: int, c: int, field: GaloisField) -> tuple[Quiver, list[Relation]]:
    quiver = Quiver(
        ["0", "1"],
        _arrows(
            [("alpha", "0", "0"), ("beta", "0", "1"), ("gamma", "1", "0"), ("eta", "1", "1")]
        ),
    )
    q = _Builder(quiver, field)
    cycle = q.word("alpha", "beta", "gamma")
    return quiver, [
        q.monomial("beta", "eta"),
        q.monomial("eta", "gamma"),
        q.monomial("gamma", "beta"),
        q.equal(cycle, q.word("beta", "gamma", "alpha")),
        q.equal(q.word("alpha", "alpha"), cycle.scale(c)),
        q.equal(q.word("gamma", "alpha", "beta"), q.word("eta", times=r)),
    ]


def _family_d1c(r: int, field: GaloisField) -> tuple[Quiver, list[Relation]]:
    quiver = Quiver(["1"], _arrows([("alpha", "1", "1"), ("beta", "1", "1")]))
    q = _Builder(quiver, field)
    return quiver, [
        q.monomial("alpha", "alpha"),
        q.monomial("beta", "beta"),
        q.equal(q.word("alpha", "beta", times=r), q.word("beta", "alpha", times=r)),
    ]


_CONSTRUCTORS: dict[str, Callable[..., tuple[Quiver, list[Relation]]]] = {
    "A": _family_a,
    "B": _family_b,
    "C": _family_c,
    "D2A": _family_d2a,
    "D2B": _family_d2b,
    "D1C": _family_d1c,
}


def block_relations(block: BlockId, field: GaloisField) -> tuple[Quiver, list[Relation]]:
    """Quiver and defining relations of a block, without completion."""
    block = block.canonical()
    constructor = _CONSTRUCTORS[block.family]
    if block.c is None:
        return constructor(block.r, field)
    return constructor(block.r, block.c, field)


@lru_cache(maxsize=128)
def _make_block_cached(block: BlockId, field_degree: int, max_len: int, max_rules: int) -> AlgebraPresentation:
    field = field_of(field_degree)
    quiver, relations = block_relations(block, field)
    logger.info("Building block", extra={"block": block.label, "field_degree": field_degree})
    return complete(
        quiver,
        relations,
        max_len=max_len,
        field=field,
        max_rules=max_rules,
        name=block.label,
        block=block,
    )


def make_block(block: BlockId, field: Optional[GaloisField] = None) -> AlgebraPresentation:
    """
    Completed presentation of a catalog block.

    Presentations are cached per (block, field); C_1 returns the A_1 object.

    Args:
        block: the block identifier
        field: coefficient field (default from settings)

    Raises:
        InvalidBlockError: if block is invalid (raised by BlockId itself)

    Example:
        >>> make_block(BlockId("A", 1)).dimension
        18
    """
    settings = load_settings().apply_env()
    degree = field.degree if field is not None else settings.field.degree
    canonical = block.canonical()
    max_len = settings.completion.max_len_for(canonical.r)
    return _make_block_cached(canonical, degree, max_len, settings.completion.max_rules)


def parse_block_id(family: str, r: int, c: Optional[int] = None) -> BlockId:
    """BlockId from CLI-style strings; family names are case-insensitive."""
    normalized = family.strip().upper()
    if c is not None and normalized not in FAMILIES_WITH_C:
        raise InvalidBlockError(f"{normalized} takes no c parameter")
    if normalized in FAMILIES_WITH_C and c is None:
        c = 0
    return BlockId(normalized, r, c)


def all_blocks(r_max: int) -> list[BlockId]:
    """Every catalog block with 1 <= r <= r_max, C_1 omitted as an alias of A_1."""
    blocks: list[BlockId] = []
    for family in FAMILIES:
        for r in range(1, r_max + 1):
            if family == "C" and r == 1:
                continue
            if family in FAMILIES_WITH_C:
                blocks.extend(BlockId(family, r, c) for c in (0, 1))
            else:
                blocks.append(BlockId(family, r))
    return blocks


__all__ = [
    "FAMILIES",
    "FAMILIES_WITH_C",
    "BlockId",
    "all_blocks",
    "block_relations",
    "make_block",
    "parse_block_id",
]
