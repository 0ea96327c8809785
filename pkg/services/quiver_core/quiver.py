"""
Quivers, Paths and Algebra Elements

Paths compose left to right: the product pq traverses p, then q, so it is
defined exactly when target(p) == source(q). A path of length zero is the
vertex idempotent e_v. AlgebraElement is an immutable finite linear
combination of paths over GF(2^m); its product is the free path-algebra
product, with no relations applied (see services.rewrite_engine for that).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

import networkx as nx

from services.common.errors import FieldError, QuiverError

from .field import FieldElement, GaloisField

Scalar = Union[int, FieldElement]


@dataclass(frozen=True)
class Arrow:
    """A named arrow source -> target."""

    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """
    A path in a quiver.

    Attributes:
        source: start vertex
        target: end vertex
        arrows: arrow names in traversal order; empty for a vertex idempotent
    """

    source: str
    target: str
    arrows: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_vertex(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        return format_path(self)


class Quiver:
    """
    A finite quiver with ordered vertices and arrows.

    Declaration order matters: it fixes the term order used by the rewriting
    engine and the coordinate order of degree vectors.

    Example:
        >>> q = Quiver(["1", "2"], [Arrow("a", "1", "2"), Arrow("b", "2", "1")])
        >>> q.path("a", "b")
        Path(source='1', target='1', arrows=('a', 'b'))
    """

    def __init__(self, vertices: Sequence[str], arrows: Sequence[Arrow]):
        self.vertices: tuple[str, ...] = tuple(str(v) for v in vertices)
        self.arrows: tuple[Arrow, ...] = tuple(arrows)

        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError(f"Duplicate vertex ids in {list(self.vertices)}")
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}

        self._by_name: dict[str, Arrow] = {}
        for arrow in self.arrows:
            if arrow.name in self._by_name:
                raise QuiverError(f"Duplicate arrow name {arrow.name!r}")
            for end in (arrow.source, arrow.target):
                if end not in self._vertex_index:
                    raise QuiverError(f"Arrow {arrow.name!r} uses undeclared vertex {end!r}")
            self._by_name[arrow.name] = arrow
        self._arrow_index = {a.name: i for i, a in enumerate(self.arrows)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def __repr__(self) -> str:
        return f"Quiver(vertices={list(self.vertices)}, arrows={[a.name for a in self.arrows]})"

    @property
    def arrow_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise QuiverError(f"Unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self._vertex_index

    def vertex_index(self, vertex: str) -> int:
        try:
            return self._vertex_index[vertex]
        except KeyError:
            raise QuiverError(f"Unknown vertex {vertex!r}") from None

    def arrow_index(self, name: str) -> int:
        return self._arrow_index[name]

    def vertex_path(self, vertex: str) -> Path:
        self.vertex_index(vertex)
        return Path(vertex, vertex)

    def arrow_path(self, name: str) -> Path:
        arrow = self.arrow(name)
        return Path(arrow.source, arrow.target, (name,))

    def path(self, *names: str) -> Path:
        """Build the path traversing the named arrows in order."""
        if not names:
            raise QuiverError("A path needs at least one arrow; use vertex_path for e_v")
        result = self.arrow_path(names[0])
        for name in names[1:]:
            step = compose_paths(result, self.arrow_path(name))
            if step is None:
                raise QuiverError(
                    f"Arrows do not compose: {format_path(result)} ends at {result.target}, "
                    f"{name} starts at {self.arrow(name).source}"
                )
            result = step
        return result

    def order_key(self, path: Path) -> tuple[int, tuple[int, ...], int]:
        """Length first, then arrow declaration order; longer paths are larger."""
        return (
            path.length,
            tuple(self._arrow_index[a] for a in path.arrows),
            self._vertex_index[path.source],
        )

    def graph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for arrow in self.arrows:
            graph.add_edge(arrow.source, arrow.target, key=arrow.name)
        return graph

    def has_parallel_arrows(self) -> bool:
        """True if two distinct arrows share both source and target."""
        seen: set[tuple[str, str]] = set()
        for arrow in self.arrows:
            ends = (arrow.source, arrow.target)
            if ends in seen:
                return True
            seen.add(ends)
        return False

    def component_count(self) -> int:
        return nx.number_weakly_connected_components(self.graph())

    def arrows_between(self, source: str, target: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == source and a.target == target]


def compose_paths(p: Path, q: Path) -> Optional[Path]:
    """
    Concatenate p then q.

    Returns:
        the composite path, or None when target(p) != source(q)
    """
    if p.target != q.source:
        return None
    return Path(p.source, q.target, p.arrows + q.arrows)


def format_path(path: Path) -> str:
    """Render a path compactly, folding whole-word powers: ('c2','d2','c2','d2') -> (c2*d2)^2."""
    if path.is_vertex:
        return f"e({path.source})"
    return format_word(path.arrows)


def format_word(word: Sequence[str]) -> str:
    n = len(word)
    for period in range(1, n // 2 + 1):
        if n % period == 0 and tuple(word) == tuple(word[:period]) * (n // period):
            block = "*".join(word[:period])
            if period > 1:
                block = f"({block})"
            return f"{block}^{n // period}"
    return "*".join(word)


class AlgebraElement:
    """
    A finite linear combination of paths with nonzero coefficients.

    Instances are immutable; arithmetic returns new elements. Equality is
    equality of the coefficient maps over the same quiver.
    """

    __slots__ = ("quiver", "field", "_terms", "_hash")

    def __init__(
        self,
        quiver: Quiver,
        field: GaloisField,
        terms: Optional[Mapping[Path, Scalar]] = None,
    ):
        self.quiver = quiver
        self.field = field
        cleaned: dict[Path, FieldElement] = {}
        for path, coefficient in (terms or {}).items():
            value = field(coefficient)
            if value:
                cleaned[path] = value
        self._terms = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def zero(cls, quiver: Quiver, field: GaloisField) -> AlgebraElement:
        return cls(quiver, field)

    @classmethod
    def from_path(
        cls, quiver: Quiver, field: GaloisField, path: Path, coefficient: Scalar = 1
    ) -> AlgebraElement:
        return cls(quiver, field, {path: coefficient})

    @classmethod
    def _from_clean(
        cls, quiver: Quiver, field: GaloisField, terms: dict[Path, FieldElement]
    ) -> AlgebraElement:
        element = cls.__new__(cls)
        element.quiver = quiver
        element.field = field
        element._terms = terms
        element._hash = None
        return element

    def terms(self) -> dict[Path, FieldElement]:
        return dict(self._terms)

    def paths(self) -> list[Path]:
        return sorted(self._terms, key=self.quiver.order_key)

    def items(self) -> Iterator[tuple[Path, FieldElement]]:
        return iter(self._terms.items())

    def coefficient(self, path: Path) -> FieldElement:
        return self._terms.get(path, self.field.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def leading_path(self) -> Path:
        if not self._terms:
            raise QuiverError("The zero element has no leading path")
        return max(self._terms, key=self.quiver.order_key)

    def _check_compatible(self, other: AlgebraElement) -> None:
        if self.quiver is not other.quiver and self.quiver != other.quiver:
            raise QuiverError("Elements live over different quivers")
        if self.field is not other.field:
            raise FieldError(f"Elements live over {self.field} and {other.field}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self._terms)
        for path, value in other._terms.items():
            total = terms.get(path)
            total = value if total is None else total + value
            if total:
                terms[path] = total
            else:
                terms.pop(path, None)
        return AlgebraElement._from_clean(self.quiver, self.field, terms)

    # Characteristic 2
    __sub__ = __add__

    def __neg__(self) -> AlgebraElement:
        return self

    def scale(self, scalar: Scalar) -> AlgebraElement:
        value = self.field(scalar)
        if not value:
            return AlgebraElement.zero(self.quiver, self.field)
        return AlgebraElement._from_clean(
            self.quiver, self.field, {p: c * value for p, c in self._terms.items()}
        )

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return multiply_elements(self, other)
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> AlgebraElement:
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.quiver == other.quiver and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"AlgebraElement({format_element(self)})"

    def __str__(self) -> str:
        return format_element(self)


def multiply_elements(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of compose_paths; incomposable pairs contribute zero."""
    x._check_compatible(y)
    by_source: dict[str, list[tuple[Path, FieldElement]]] = {}
    for path, value in y._terms.items():
        by_source.setdefault(path.source, []).append((path, value))

    terms: dict[Path, FieldElement] = {}
    for p, a in x._terms.items():
        for q, b in by_source.get(p.target, ()):
            product = Path(p.source, q.target, p.arrows + q.arrows)
            value = a * b
            total = terms.get(product)
            total = value if total is None else total + value
            if total:
                terms[product] = total
            else:
                terms.pop(product, None)
    return AlgebraElement._from_clean(x.quiver, x.field, terms)


def format_element(element: AlgebraElement) -> str:
    if element.is_zero():
        return "0"
    parts = []
    for path in sorted(element._terms, key=element.quiver.order_key, reverse=True):
        coefficient = element._terms[path]
        text = format_path(path)
        if coefficient != 1:
            text = f"{coefficient.value}*{text}"
        parts.append(text)
    return " + ".join(parts)


def sum_elements(
    quiver: Quiver, field: GaloisField, elements: Iterable[AlgebraElement]
) -> AlgebraElement:
    total = AlgebraElement.zero(quiver, field)
    for element in elements:
        total = total + element
    return total


__all__ = [
    "AlgebraElement",
    "Arrow",
    "Path",
    "Quiver",
    "compose_paths",
    "format_element",
    "format_path",
    "format_word",
    "multiply_elements",
    "sum_elements",
]
