"""
Tilting Complexes

Each transfer edge is a two-term tilting complex T = sum of T_i, one summand
per vertex of the target block. Every T_i is either a stalk P_v or a complex
[P_u<-deg(x)> + P_w<-deg(y)> -> P_v] whose differential is right
multiplication by x and y; the shifts make the differential homogeneous.

    A-B      T_1 = [P2<-a2> + P3<-b2> -> P1] by (a2, b2),  T_2 = P2, T_3 = P3
    B-C      T_2 = [P1<-c1> + P3<-d2> -> P2] by (c1, d2),  T_1 = P1, T_3 = P3
    D2A-D2B  T_0 = [P1<-gamma> + P1<-(gamma*alpha)> -> P0] by (gamma, gamma*alpha),
             T_1 = P1

C_1 is A_1, whose vertex 1 plays the role of vertex 2 of C_r; the B-C edge
relabels its summands accordingly when r = 1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from services.block_catalog import BlockId
from services.common.errors import TransferError
from services.quiver_core import DegreeAssignment
from services.rewrite_engine import AlgebraPresentation

from .complexes import GradedComplex, Summand, require_valid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TransferEdge:
    """
    A derived equivalence used to move gradings between families.

    Attributes:
        key: edge id as used on the command line
        source: source family
        target: target family
        hub: vertex whose T_i is the two-term complex
        words: the arrow words spanning its differential
    """

    key: str
    source: str
    target: str
    hub: str
    words: tuple[tuple[str, ...], ...]

    def target_block(self, block: BlockId) -> BlockId:
        if block.family != self.source:
            raise TransferError(f"Edge {self.key} starts at {self.source}, not at {block.label}")
        return BlockId(self.target, block.r, block.c).canonical()


EDGES: dict[str, TransferEdge] = {
    edge.key: edge
    for edge in (
        TransferEdge("A-B", "A", "B", "1", (("a2",), ("b2",))),
        TransferEdge("B-C", "B", "C", "2", (("c1",), ("d2",))),
        TransferEdge("D2A-D2B", "D2A", "D2B", "0", (("gamma",), ("gamma", "alpha"))),
    )
}

# C-vertex -> A-vertex, for C_1 = A_1
_C1_AS_A1 = {"1": "2", "2": "1", "3": "3"}


def get_edge(key: str) -> TransferEdge:
    """
    Raises:
        TransferError: for an unknown edge id
    """
    normalized = key.strip().upper()
    if normalized not in EDGES:
        raise TransferError(f"Unknown transfer edge {key!r}; expected one of {', '.join(EDGES)}")
    return EDGES[normalized]


@dataclass
class TiltingComplex:
    """
    T = sum of T_i over the target vertices.

    Attributes:
        edge: the transfer edge
        source: the source block
        target: the target block
        summands: target vertex -> T_i
    """

    edge: TransferEdge
    source: BlockId
    target: BlockId
    summands: dict[str, GradedComplex]

    def describe(self) -> list[str]:
        lines = [f"tilting complex {self.edge.key}: {self.source.label} -> {self.target.label}"]
        for vertex in sorted(self.summands):
            lines.extend(self.summands[vertex].describe())
        return lines


def _source_block(pres: AlgebraPresentation) -> BlockId:
    if not pres.is_catalog:
        raise TransferError(f"{pres.name} is not a catalog block; transfers need one")
    return pres.block


def tilting_complex(
    edge: str, pres: AlgebraPresentation, deg: Optional[DegreeAssignment] = None
) -> TiltingComplex:
    """
    Build T for an edge over the source block pres.

    Args:
        edge: "A-B", "B-C" or "D2A-D2B"
        pres: source block presentation
        deg: homogeneous grading fixing the shifts; None gives shift 0 everywhere

    Raises:
        TransferError: unknown edge or a source block of the wrong family
        ComplexError: if some T_i is not homogeneous for deg

    Example:
        >>> str(tilting_complex("A-B", make_block(BlockId("A", 2)), deg).summands["1"])
        'T_1 = [0: P2<-1> + P3<-1>; 1: P1]'
    """
    spec = get_edge(edge)
    source = _source_block(pres)
    target = spec.target_block(source)

    sources = []
    hub_vertex = None
    for word in spec.words:
        element = pres.element(*word)
        path = pres.quiver.path(*word)
        shift = -deg.degree_of(path) if deg is not None else 0
        sources.append((Summand(path.source, shift), element))
        hub_vertex = path.target

    summands: dict[str, GradedComplex] = {}
    for vertex in pres.quiver.vertices:
        name = f"T_{vertex}"
        if vertex == spec.hub:
            summands[vertex] = GradedComplex.two_term(sources, Summand(hub_vertex), name=name)
        else:
            summands[vertex] = GradedComplex.stalk(vertex, name=name)

    if target.family == "A" and spec.key == "B-C":
        summands = {_C1_AS_A1[v]: t for v, t in summands.items()}
        for vertex, complex_ in summands.items():
            complex_.name = f"T_{vertex}"
    for complex_ in summands.values():
        require_valid(complex_, pres, deg)

    logger.debug("Built tilting complex", extra={"edge": spec.key, "source": source.label})
    return TiltingComplex(spec, source, target, summands)


__all__ = ["EDGES", "TiltingComplex", "TransferEdge", "get_edge", "tilting_complex"]
