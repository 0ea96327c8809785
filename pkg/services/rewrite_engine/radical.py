"""
Radical Filtrations

rad^i P_v is computed as a genuine power of the arrow ideal acting on
P_v = A e_v: rad^0 P_v is spanned by the basis paths ending at v and
rad^(i+1) P_v is spanned by the reduced products arrow * m for m spanning
rad^i P_v. Spanning vectors are kept grouped by (source vertex, degree);
each group is a summand e_s (rad^i P_v)_d, so layer multiplicities are
rank differences per group.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from services.common.errors import InhomogeneousGradingError
from services.quiver_core import AlgebraElement, Degree, DegreeAssignment, EchelonBasis
from services.quiver_core.graded import degree_sort_key

from .presentation import AlgebraPresentation

GroupKey = tuple[str, Optional[Degree]]


@dataclass(frozen=True)
class LayerEntry:
    """One composition factor: the simple at `simple`, optionally in degree `degree`."""

    simple: str
    degree: Optional[Degree] = None

    def __str__(self) -> str:
        if self.degree is None:
            return f"S{self.simple}"
        return f"S{self.simple}@{self.degree}"


@dataclass(frozen=True)
class LayerTable:
    """
    Radical layers of the projective at `vertex`.

    Attributes:
        vertex: the vertex v of P_v
        layers: layer i lists the composition factors of rad^i / rad^(i+1)
    """

    vertex: str
    layers: tuple[tuple[LayerEntry, ...], ...]

    @property
    def dimension(self) -> int:
        return sum(len(layer) for layer in self.layers)

    @property
    def loewy_length(self) -> int:
        return len(self.layers)

    def top(self) -> tuple[LayerEntry, ...]:
        return self.layers[0]

    def socle(self) -> tuple[LayerEntry, ...]:
        return self.layers[-1]

    def multisets(self) -> list[Counter]:
        return [Counter(layer) for layer in self.layers]

    def simples(self) -> list[Counter]:
        """Ungraded view: multiset of simples per layer."""
        return [Counter(entry.simple for entry in layer) for layer in self.layers]

    def render(self) -> str:
        return "\n".join(" ".join(str(e) for e in layer) for layer in self.layers)


def _group_key(element: AlgebraElement, grading: Optional[DegreeAssignment]) -> GroupKey:
    path = next(iter(element.paths()))
    degree = grading.degree_of(path) if grading is not None else None
    return (path.source, degree)


def _entry_sort_key(pres: AlgebraPresentation, entry: LayerEntry) -> tuple:
    degree = (0, 0) if entry.degree is None else degree_sort_key(entry.degree)
    return (pres.quiver.vertex_index(entry.simple), degree)


def _reduce_groups(
    pres: AlgebraPresentation,
    spanning: list[AlgebraElement],
    grading: Optional[DegreeAssignment],
) -> dict[GroupKey, list[AlgebraElement]]:
    """Echelon bases per (source, degree) group, as algebra elements."""
    order_key = pres.quiver.order_key
    groups: dict[GroupKey, EchelonBasis] = {}
    for element in spanning:
        if element.is_zero():
            continue
        key = _group_key(element, grading)
        basis = groups.setdefault(key, EchelonBasis(pres.field, key=order_key))
        basis.add(element.terms())
    return {
        key: [AlgebraElement(pres.quiver, pres.field, row) for row in basis.rows()]
        for key, basis in groups.items()
    }


def radical_power_bases(
    pres: AlgebraPresentation,
    vertex: str,
    grading: Optional[DegreeAssignment] = None,
) -> list[dict[GroupKey, list[AlgebraElement]]]:
    """
    Grouped bases of rad^0 P_v, rad^1 P_v, ... up to the last nonzero power.

    Raises:
        InhomogeneousGradingError: if grading is given and not homogeneous
    """
    pres.quiver.vertex_index(vertex)
    if grading is not None:
        bad = [rel for rel in pres.relations if not rel.is_homogeneous_under(grading)]
        if bad:
            raise InhomogeneousGradingError(
                f"Grading is not homogeneous for relation {bad[0].describe()}"
            )

    arrows_into: dict[str, list[AlgebraElement]] = {v: [] for v in pres.quiver.vertices}
    for arrow in pres.quiver.arrows:
        arrows_into[arrow.target].append(pres.arrow(arrow.name))

    current = _reduce_groups(
        pres, [pres.path_element(p) for p in pres.basis_paths(target=vertex)], grading
    )
    powers = [current]
    while True:
        spanning = []
        for (source, _degree), elements in current.items():
            for arrow in arrows_into[source]:
                for element in elements:
                    spanning.append(pres.normal_form(arrow * element))
        current = _reduce_groups(pres, spanning, grading)
        if not current:
            break
        powers.append(current)
        if len(powers) > pres.dimension + 1:
            raise RuntimeError("Radical filtration did not terminate")
    return powers


def radical_layers(
    pres: AlgebraPresentation,
    vertex: str,
    grading: Optional[DegreeAssignment] = None,
) -> LayerTable:
    """
    Graded or ungraded radical layers of P_vertex.

    Example:
        >>> table = radical_layers(make_block(BlockId("A", 1)), "2")
        >>> [len(layer) for layer in table.layers]
        [1, 1, 1, 1, 1]
    """
    powers = radical_power_bases(pres, vertex, grading)
    layers: list[tuple[LayerEntry, ...]] = []
    for index, groups in enumerate(powers):
        following = powers[index + 1] if index + 1 < len(powers) else {}
        entries: list[LayerEntry] = []
        for key, elements in groups.items():
            multiplicity = len(elements) - len(following.get(key, ()))
            entries.extend([LayerEntry(key[0], key[1])] * multiplicity)
        entries.sort(key=lambda e: _entry_sort_key(pres, e))
        layers.append(tuple(entries))
    return LayerTable(vertex, tuple(layers))


def radical_square_corrections(
    pres: AlgebraPresentation, source: str, target: str
) -> list[AlgebraElement]:
    """Basis of e_source (rad^2 A) e_target."""
    powers = radical_power_bases(pres, target)
    if len(powers) < 3:
        return []
    return list(powers[2].get((source, None), []))


__all__ = [
    "LayerEntry",
    "LayerTable",
    "radical_layers",
    "radical_power_bases",
    "radical_square_corrections",
]
