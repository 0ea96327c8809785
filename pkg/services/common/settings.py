"""
Settings Loader

This module loads runtime defaults from config/gqa.yml: the coefficient
field, completion guards, the positivity enumeration cap and the summary
table sweep. The GQA_FIELD environment variable overrides the field degree.
"""

from __future__ import annotations

import logging
import os
import re
from dataclasses import dataclass, field as dataclass_field
from pathlib import Path
from typing import Any, Optional

import yaml

logger = logging.getLogger(__name__)

FIELD_ENV_VAR = "GQA_FIELD"
_FIELD_PATTERN = re.compile(r"^\s*(?:gf2\^)?(\d+)\s*$", re.IGNORECASE)


def _project_root() -> Path:
    return Path(__file__).resolve().parent.parent.parent


def parse_field_spec(spec: str) -> int:
    """
    Parse a field designation such as "gf2^2" or "3" into the degree m.

    Raises:
        ValueError: If the string is not a recognised field designation
    """
    match = _FIELD_PATTERN.match(spec)
    if not match:
        raise ValueError(f"Invalid field designation {spec!r}; expected 'gf2^m' or 'm'")
    return int(match.group(1))


@dataclass
class FieldSettings:
    """Coefficient field GF(2^degree)."""

    degree: int = 1
    max_degree: int = 8

    def validate(self) -> None:
        if not 1 <= self.degree <= self.max_degree:
            raise ValueError(
                f"field.degree must lie in 1..{self.max_degree}, got {self.degree}"
            )


@dataclass
class CompletionSettings:
    """Saturation guards for rewriting-system completion."""

    max_len_per_r: int = 8
    max_len_offset: int = 8
    default_max_len: int = 40
    max_rules: int = 5000

    def max_len_for(self, r: int) -> int:
        return self.max_len_per_r * r + self.max_len_offset


@dataclass
class PositivitySettings:
    """Extreme rays are enumerated over arrow subsets; this caps the arrow count."""

    max_arrows: int = 16


@dataclass
class TableSettings:
    r_max: int = 5
    workers: int = 1


@dataclass
class RandomSettings:
    seed: int = 20240611


@dataclass
class Settings:
    """Complete runtime configuration."""

    field: FieldSettings = dataclass_field(default_factory=FieldSettings)
    completion: CompletionSettings = dataclass_field(default_factory=CompletionSettings)
    positivity: PositivitySettings = dataclass_field(default_factory=PositivitySettings)
    table: TableSettings = dataclass_field(default_factory=TableSettings)
    random: RandomSettings = dataclass_field(default_factory=RandomSettings)

    @classmethod
    def from_dict(cls, config_dict: dict[str, Any]) -> Settings:
        """Create Settings from a parsed YAML mapping; missing keys keep defaults."""
        field_dict = config_dict.get("field", {}) or {}
        completion_dict = config_dict.get("completion", {}) or {}
        positivity_dict = config_dict.get("positivity", {}) or {}
        table_dict = config_dict.get("table", {}) or {}
        random_dict = config_dict.get("random", {}) or {}

        field_settings = FieldSettings(
            degree=int(field_dict.get("degree", 1)),
            max_degree=int(field_dict.get("max_degree", 8)),
        )
        field_settings.validate()

        return cls(
            field=field_settings,
            completion=CompletionSettings(
                max_len_per_r=int(completion_dict.get("max_len_per_r", 8)),
                max_len_offset=int(completion_dict.get("max_len_offset", 8)),
                default_max_len=int(completion_dict.get("default_max_len", 40)),
                max_rules=int(completion_dict.get("max_rules", 5000)),
            ),
            positivity=PositivitySettings(
                max_arrows=int(positivity_dict.get("max_arrows", 16)),
            ),
            table=TableSettings(
                r_max=int(table_dict.get("r_max", 5)),
                workers=int(table_dict.get("workers", 1)),
            ),
            random=RandomSettings(seed=int(random_dict.get("seed", 20240611))),
        )

    def apply_env(self, environ: Optional[dict[str, str]] = None) -> Settings:
        """Apply the GQA_FIELD override, if present."""
        env = os.environ if environ is None else environ
        spec = env.get(FIELD_ENV_VAR)
        if spec:
            self.field.degree = parse_field_spec(spec)
            self.field.validate()
            logger.debug("Field degree overridden from environment", extra={"degree": self.field.degree})
        return self


def load_settings(config_path: Optional[str] = None) -> Settings:
    """
    Load runtime settings from YAML.

    Args:
        config_path: Path to gqa.yml. If None, uses config/gqa.yml under the project root.

    Returns:
        Settings with every section populated

    Raises:
        FileNotFoundError: If the config file doesn't exist
        ValueError: If the config is invalid

    Example:
        >>> settings = load_settings()
        >>> settings.completion.max_len_for(2)
        24
    """
    if config_path is None:
        config_path = str(_project_root() / "config" / "gqa.yml")

    logger.debug("Loading settings", extra={"config_path": config_path})

    try:
        with open(config_path, encoding="utf-8") as f:
            config_dict = yaml.safe_load(f)
        if not config_dict:
            logger.warning("Empty settings file, using defaults")
            config_dict = {}
        return Settings.from_dict(config_dict)
    except FileNotFoundError:
        logger.error(f"Settings file not found: {config_path}")
        raise
    except yaml.YAMLError as e:
        raise ValueError(f"Invalid YAML in settings file: {e}") from e
    except (TypeError, ValueError) as e:
        raise ValueError(f"Failed to load settings: {e}") from e


__all__ = [
    "FIELD_ENV_VAR",
    "CompletionSettings",
    "FieldSettings",
    "PositivitySettings",
    "RandomSettings",
    "Settings",
    "TableSettings",
    "load_settings",
    "parse_field_spec",
]
