"""
Maximal Tori

The rank of a maximal torus of Out^0 is read off the normalized coordinates.
At the identity class the unipotent coordinates are zero and the
multiplicative ones are one; the torus is the set of tuples whose unipotent
coordinates vanish, so it is parametrized by the coordinates that are
nonzero at the identity. Blocks without their own coordinates take the rank
of a derived-equivalent block, since Out^0 is a derived invariant.
"""

from __future__ import annotations

import logging

from services.block_catalog import BlockId
from services.quiver_core import GF2

from .normalization import identity_coordinates

logger = logging.getLogger(__name__)

# family -> derived-equivalent family with normalized coordinates
DERIVED_EQUIVALENT = {"A": "C", "B": "C", "D2A": "D2B"}


def normalized_representative(block: BlockId) -> BlockId:
    """
    The derived-equivalent block whose Out^0 has normalized coordinates.

    C_1 is returned as such even though the catalog builds it as A_1; only
    its coordinates are used here.
    """
    family = DERIVED_EQUIVALENT.get(block.family, block.family)
    if family == block.family:
        return block
    return BlockId(family, block.r, block.c)


def torus_coordinates(block: BlockId) -> tuple[str, ...]:
    """
    Names of the normalized coordinates that parametrize a maximal torus.

    Example:
        >>> torus_coordinates(BlockId("D2B", 2, 0))
        ('v', 'd_1')
    """
    target = normalized_representative(block)
    unit = identity_coordinates(target.family, target.r, target.c, GF2)
    names = tuple(name for name, value in unit.named_coordinates() if value)
    logger.debug("Torus coordinates", extra={"block": block.label, "coordinates": names})
    return names


def maximal_torus_rank(block: BlockId) -> int:
    """
    Rank of a maximal torus of Out^0 of the block.

    Example:
        >>> maximal_torus_rank(BlockId("D2A", 3, 1))
        1
    """
    return len(torus_coordinates(block))


__all__ = [
    "DERIVED_EQUIVALENT",
    "maximal_torus_rank",
    "normalized_representative",
    "torus_coordinates",
]
