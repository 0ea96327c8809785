"""
JSON Reports

Pydantic models for every `--json` output. Each report carries
`schema_version`; a change to a field name or meaning bumps it. Text mode
renders the same models, so both modes report identical content.
"""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = "1.0"


class Report(BaseModel):
    """Base class for CLI reports."""

    model_config = ConfigDict(extra="forbid")

    schema_version: str = SCHEMA_VERSION
    command: str


class BasisReport(Report):
    command: str = "basis"
    algebra: str
    field: str
    dimension: int
    rules: int
    basis: list[str]


class CartanEntry(BaseModel):
    source: str
    target: str
    dimension: int


class DimReport(Report):
    command: str = "dim"
    algebra: str
    dimension: int
    projectives: dict[str, int]
    cartan: list[CartanEntry]


class LayerItem(BaseModel):
    simple: str
    degree: Optional[str] = None


class ProjectiveLayers(BaseModel):
    vertex: str
    loewy_length: int
    layers: list[list[LayerItem]]


class LayersReport(Report):
    command: str = "layers"
    algebra: str
    graded: bool
    projectives: list[ProjectiveLayers]


class LatticeReport(Report):
    command: str = "grade lattice"
    algebra: str
    arrows: list[str]
    rank_h: int
    rank_b: int
    rank: int
    torsion: list[int]
    basis: list[list[int]] = Field(description="representatives of a basis of H / B")


class CheckReport(Report):
    command: str = "grade check"
    algebra: str
    grading: dict[str, int]
    homogeneous: bool
    cocharacter: Optional[list[int]] = None
    torsion: list[int] = Field(default_factory=list)
    negative_cycles: list[str] = Field(default_factory=list)


class PositiveReport(Report):
    command: str = "grade positive"
    algebra: str
    positive: bool
    witness: Optional[dict[str, int]] = None
    rays: list[list[int]] = Field(default_factory=list)


class TightReport(Report):
    command: str = "grade tight"
    algebra: str
    verdict: str
    witness: Optional[dict[str, int]] = None
    trace: list[str] = Field(default_factory=list)


class HomEntry(BaseModel):
    source: str
    target: str
    degrees: list[int]


class TransferReport(Report):
    command: str = "transfer"
    edge: str
    source: str
    target: str
    source_grading: dict[str, int]
    degrees: dict[str, int]
    alternatives: list[dict[str, int]] = Field(default_factory=list)
    hom: list[HomEntry] = Field(default_factory=list)


class HrReport(Report):
    command: str = "hr"
    operation: str
    r: int
    field: str
    operands: list[list[int]]
    result: list[int]


class OutReport(Report):
    command: str = "out"
    operation: str
    family: str
    field: str
    result: dict[str, Any]
    operands: list[dict[str, Any]] = Field(default_factory=list)


class TableRow(BaseModel):
    block: str
    nontrivial_grading: bool
    positive: bool
    tight: Optional[bool]
    torus_rank: int
    lattice_rank: int
    mismatches: list[str] = Field(default_factory=list)

    @property
    def matches(self) -> bool:
        return not self.mismatches


class TableReport(Report):
    command: str = "table"
    r_max: int
    field: str
    rows: list[TableRow]
    mismatches: int


class ErrorReport(Report):
    command: str = "error"
    error: str
    message: str
    line: Optional[int] = None
    column: Optional[int] = None
    expected: list[str] = Field(default_factory=list)


REPORT_MODELS: tuple[type[Report], ...] = (
    BasisReport,
    DimReport,
    LayersReport,
    LatticeReport,
    CheckReport,
    PositiveReport,
    TightReport,
    TransferReport,
    HrReport,
    OutReport,
    TableReport,
    ErrorReport,
)


def report_schemas() -> dict[str, Any]:
    """JSON schema of every report, keyed by model name."""
    return {
        "schema_version": SCHEMA_VERSION,
        "reports": {model.__name__: model.model_json_schema() for model in REPORT_MODELS},
    }


__all__ = [
    "SCHEMA_VERSION",
    "BasisReport",
    "CartanEntry",
    "CheckReport",
    "DimReport",
    "ErrorReport",
    "HomEntry",
    "HrReport",
    "LatticeReport",
    "LayerItem",
    "LayersReport",
    "OutReport",
    "PositiveReport",
    "ProjectiveLayers",
    "REPORT_MODELS",
    "Report",
    "TableReport",
    "TableRow",
    "TightReport",
    "TransferReport",
    "report_schemas",
]
