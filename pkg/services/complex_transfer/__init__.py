"""
Complex Transfer

Graded complexes of shifted projectives, graded Hom in the homotopy
category, the tilting complexes of the three transfer edges and the
transfer of gradings along them.
"""

from .complexes import GradedComplex, Summand, require_valid, validate
from .homgr import ChainMap, ChainMapSpace, compose_chain_maps, homgr
from .tilting import EDGES, TiltingComplex, TransferEdge, get_edge, tilting_complex
from .transfer import (
    TransferResult,
    hom_table,
    irreducible_maps,
    match_arrows,
    radical_maps,
    read_arrow_degrees,
    transfer_grading,
)

__version__ = "1.0.0"

__all__ = [
    "EDGES",
    "ChainMap",
    "ChainMapSpace",
    "GradedComplex",
    "Summand",
    "TiltingComplex",
    "TransferEdge",
    "TransferResult",
    "compose_chain_maps",
    "get_edge",
    "hom_table",
    "homgr",
    "irreducible_maps",
    "match_arrows",
    "radical_maps",
    "read_arrow_degrees",
    "require_valid",
    "tilting_complex",
    "transfer_grading",
    "validate",
]
