"""
Known Profiles

Loads the summary table (config/known_profiles.yml): for each family, and c
where it applies, whether nontrivial, positive and tight gradings exist and
the rank of a maximal torus of Out0. The table is data, used as the oracle
the engine's verdicts are compared against.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Union

import yaml

from .blocks import FAMILIES, BlockId

logger = logging.getLogger(__name__)

ProfileKey = tuple[str, Optional[int]]


@dataclass(frozen=True)
class RCondition:
    """
    A condition on r: always, never, r in a finite set, or r <= bound.

    Example:
        >>> RCondition.from_value({"only": [1, 4]}).holds(4)
        True
    """

    kind: str
    values: tuple[int, ...] = ()

    @classmethod
    def from_value(cls, value: Union[str, bool, dict[str, Any]]) -> RCondition:
        if value is True or value == "always":
            return cls("always")
        if value is False or value == "never":
            return cls("never")
        if isinstance(value, dict):
            if "only" in value:
                return cls("only", tuple(int(r) for r in value["only"]))
            if "at_most" in value:
                return cls("at_most", (int(value["at_most"]),))
        raise ValueError(f"Invalid condition on r: {value!r}")

    def holds(self, r: int) -> bool:
        if self.kind == "always":
            return True
        if self.kind == "never":
            return False
        if self.kind == "only":
            return r in self.values
        return r <= self.values[0]

    def __str__(self) -> str:
        if self.kind in ("always", "never"):
            return self.kind
        if self.kind == "only":
            return "only if r in {" + ", ".join(str(r) for r in self.values) + "}"
        return f"only if r <= {self.values[0]}"


@dataclass(frozen=True)
class ProfileRow:
    """One table row evaluated at a specific r."""

    nontrivial_grading: bool
    positive: bool
    tight: bool
    torus_rank: int


@dataclass(frozen=True)
class KnownProfile:
    family: str
    c: Optional[int]
    nontrivial_grading: bool
    positive: RCondition
    tight: RCondition
    torus_rank: int

    @classmethod
    def from_dict(cls, row: dict[str, Any]) -> KnownProfile:
        family = str(row["family"])
        if family not in FAMILIES:
            raise ValueError(f"Unknown family {family!r} in known profiles")
        c = row.get("c")
        return cls(
            family=family,
            c=None if c is None else int(c),
            nontrivial_grading=bool(row.get("nontrivial_grading", True)),
            positive=RCondition.from_value(row["positive"]),
            tight=RCondition.from_value(row["tight"]),
            torus_rank=int(row["torus_rank"]),
        )

    @property
    def key(self) -> ProfileKey:
        return (self.family, self.c)

    def at(self, r: int) -> ProfileRow:
        return ProfileRow(
            nontrivial_grading=self.nontrivial_grading,
            positive=self.positive.holds(r),
            tight=self.tight.holds(r),
            torus_rank=self.torus_rank,
        )


def load_known_profiles(path: Optional[str] = None) -> dict[ProfileKey, KnownProfile]:
    """
    Load the summary table.

    Args:
        path: Path to known_profiles.yml. If None, uses config/known_profiles.yml.

    Returns:
        Profiles keyed by (family, c)

    Raises:
        FileNotFoundError: If the file doesn't exist
        ValueError: If a row is malformed
    """
    if path is None:
        project_root = Path(__file__).resolve().parent.parent.parent
        path = str(project_root / "config" / "known_profiles.yml")

    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        profiles = [KnownProfile.from_dict(row) for row in data.get("profiles", [])]
    except FileNotFoundError:
        logger.error(f"Known profiles file not found: {path}")
        raise
    except yaml.YAMLError as e:
        raise ValueError(f"Invalid YAML in known profiles: {e}") from e
    except (KeyError, TypeError) as e:
        raise ValueError(f"Malformed known profile row: {e}") from e

    table = {profile.key: profile for profile in profiles}
    if len(table) != len(profiles):
        raise ValueError("Duplicate (family, c) rows in known profiles")
    logger.debug("Known profiles loaded", extra={"rows": len(table)})
    return table


def known_profile(block: BlockId, profiles: Optional[dict[ProfileKey, KnownProfile]] = None) -> KnownProfile:
    """The table row of a block (C_1 reads the A row)."""
    table = profiles if profiles is not None else load_known_profiles()
    canonical = block.canonical()
    try:
        return table[(canonical.family, canonical.c)]
    except KeyError:
        raise ValueError(f"No known profile for {canonical.label}") from None


__all__ = [
    "KnownProfile",
    "ProfileRow",
    "RCondition",
    "known_profile",
    "load_known_profiles",
]
