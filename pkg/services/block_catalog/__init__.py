"""
Block Catalog

Constructors for the dihedral-defect block families A_r, B_r, C_r,
D(2A)^{r,c}, D(2B)^{r,c}, D(1C)^r and their known summary-table profiles.
"""

from .blocks import FAMILIES, FAMILIES_WITH_C, BlockId, all_blocks, block_relations, make_block, parse_block_id
from .profiles import KnownProfile, ProfileRow, RCondition, known_profile, load_known_profiles

__version__ = "1.0.0"

__all__ = [
    "FAMILIES",
    "FAMILIES_WITH_C",
    "BlockId",
    "KnownProfile",
    "ProfileRow",
    "RCondition",
    "all_blocks",
    "block_relations",
    "known_profile",
    "load_known_profiles",
    "make_block",
    "parse_block_id",
]
