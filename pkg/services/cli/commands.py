"""
Command Implementations

Each command turns parsed arguments into a pydantic report; `render_text`
prints the same report for humans. Algebras come from a manifest file
(`--manifest`) or from the catalog (`--family/--r/--c`).
"""

from __future__ import annotations

import argparse
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import singledispatch
from pathlib import Path
from typing import Optional

import yaml

from services.block_catalog import BlockId, all_blocks, known_profile, make_block, parse_block_id
from services.common.errors import GqaError, QuiverError, TransferError
from services.common.settings import load_settings, parse_field_spec
from services.complex_transfer import get_edge, transfer_grading
from services.grading_engine import (
    extreme_rays,
    grading_lattice,
    is_homogeneous,
    negative_cycles,
    positive_grading_exists,
    tightness,
)
from services.outer_group import (
    Endomorphism,
    HrElement,
    OuterTuple,
    classify_grading,
    hr_inverse,
    hr_mul,
    maximal_torus_rank,
    normalize_outer,
    outer_mul,
)
from services.quiver_core import DegreeAssignment, GaloisField, field_of, format_word
from services.rewrite_engine import AlgebraPresentation, radical_layers

from .dsl import Manifest, catalog_manifest, parse, parse_expression, print_manifest
from .reports import (
    BasisReport,
    CartanEntry,
    CheckReport,
    DimReport,
    ErrorReport,
    HomEntry,
    HrReport,
    LatticeReport,
    LayerItem,
    LayersReport,
    OutReport,
    PositiveReport,
    ProjectiveLayers,
    Report,
    TableReport,
    TableRow,
    TightReport,
    TransferReport,
)

logger = logging.getLogger(__name__)


# Input resolution


def resolve_field(args: argparse.Namespace) -> GaloisField:
    """--field, else GQA_FIELD, else config/gqa.yml."""
    if getattr(args, "field", None):
        return field_of(parse_field_spec(args.field))
    return field_of(load_settings().apply_env().field.degree)


def field_label(field: GaloisField) -> str:
    return f"gf2^{field.degree}"


def read_manifest(path: str) -> Manifest:
    """
    Raises:
        FileNotFoundError: If the file doesn't exist
        DslSyntaxError: on malformed input
    """
    text = Path(path).read_text(encoding="utf-8")
    return parse(text)


def resolve_manifest(args: argparse.Namespace, default_family: Optional[str] = None) -> Manifest:
    """
    The algebra selected on the command line.

    Raises:
        QuiverError: if neither a manifest nor a family is given
        InvalidBlockError: bad catalog parameters
    """
    if getattr(args, "manifest", None):
        manifest = read_manifest(args.manifest)
        if manifest.has_algebra:
            return manifest
        if not args.family and default_family is None:
            raise QuiverError(f"{args.manifest} defines no algebra; add --family/--r")
        block = parse_block_id(args.family or default_family, args.r, args.c)
        return Manifest(catalog=block, grading=manifest.grading)
    family = args.family or default_family
    if family is None:
        raise QuiverError("Select an algebra with --manifest or --family/--r")
    return catalog_manifest(parse_block_id(family, args.r, args.c))


def resolve_grading(
    spec: Optional[str], pres: AlgebraPresentation, manifest: Manifest
) -> Optional[DegreeAssignment]:
    """
    A grading from --grading, falling back to the manifest's grading block.

    spec is "tight" (all ones), "symbolic" (one symbol per arrow), an inline
    list "a1=1,b1=2,...", or a path to a file with a grading block.
    """
    if spec is None:
        return manifest.degree_assignment(pres)
    quiver = pres.quiver
    if spec == "tight":
        return DegreeAssignment.uniform(quiver, 1)
    if spec == "symbolic":
        return DegreeAssignment.symbolic(quiver, {a: a for a in quiver.arrow_names})
    if "=" in spec and not Path(spec).exists():
        text = "grading { " + " ".join(f"{item.strip()};" for item in spec.split(",")) + " }"
        return parse(text).degree_assignment(pres)
    graded = read_manifest(spec)
    if graded.grading is None:
        raise QuiverError(f"{spec} contains no grading block")
    return graded.degree_assignment(pres)


def _int_grading(deg: DegreeAssignment) -> dict[str, int]:
    return {a: int(d) for a, d in deg.items()}


# Algebra commands


def basis_report(pres: AlgebraPresentation) -> BasisReport:
    return BasisReport(
        algebra=pres.name,
        field=field_label(pres.field),
        dimension=pres.dimension,
        rules=len(pres.rules),
        basis=[str(p) for p in pres.basis],
    )


def dim_report(pres: AlgebraPresentation) -> DimReport:
    cartan = pres.cartan_matrix()
    return DimReport(
        algebra=pres.name,
        dimension=pres.dimension,
        projectives={v: pres.projective_dimension(v) for v in pres.quiver.vertices},
        cartan=[CartanEntry(source=i, target=j, dimension=n) for (i, j), n in cartan.items()],
    )


def layers_report(pres: AlgebraPresentation, deg: Optional[DegreeAssignment]) -> LayersReport:
    projectives = []
    for vertex in pres.quiver.vertices:
        table = radical_layers(pres, vertex, deg)
        layers = [
            [
                LayerItem(simple=e.simple, degree=None if e.degree is None else str(e.degree))
                for e in layer
            ]
            for layer in table.layers
        ]
        projectives.append(
            ProjectiveLayers(vertex=vertex, loewy_length=table.loewy_length, layers=layers)
        )
    return LayersReport(algebra=pres.name, graded=deg is not None, projectives=projectives)


# Grading commands


def lattice_report(pres: AlgebraPresentation) -> LatticeReport:
    lattice = grading_lattice(pres)
    return LatticeReport(
        algebra=pres.name,
        arrows=list(lattice.arrows),
        rank_h=lattice.rank_h,
        rank_b=lattice.rank_b,
        rank=lattice.rank,
        torsion=list(lattice.torsion),
        basis=[list(v) for v in lattice.basis()],
    )


def check_report(pres: AlgebraPresentation, deg: DegreeAssignment) -> CheckReport:
    if not deg.is_integral:
        raise QuiverError("grade check needs integer degrees")
    homogeneous = is_homogeneous(pres, deg)
    report = CheckReport(algebra=pres.name, grading=_int_grading(deg), homogeneous=homogeneous)
    if homogeneous:
        chi = classify_grading(pres, deg)
        report.cocharacter = list(chi.exponents)
        report.torsion = list(chi.torsion)
    report.negative_cycles = [format_word(word) for word in negative_cycles(pres, deg)]
    return report


def positive_report(pres: AlgebraPresentation) -> PositiveReport:
    witness = positive_grading_exists(pres)
    return PositiveReport(
        algebra=pres.name,
        positive=witness is not None,
        witness=None if witness is None else _int_grading(witness),
        rays=[list(ray) for ray in extreme_rays(pres)],
    )


def tight_report(pres: AlgebraPresentation) -> TightReport:
    result = tightness(pres)
    return TightReport(
        algebra=pres.name,
        verdict=result.verdict.value,
        witness=None if result.witness is None else _int_grading(result.witness),
        trace=list(result.trace),
    )


# Transfer


def transfer_report(edge: str, pres: AlgebraPresentation, deg: DegreeAssignment) -> TransferReport:
    result = transfer_grading(edge, pres, deg)
    hom = [
        HomEntry(source=i, target=j, degrees=[int(d) for d in space.degrees()])
        for (i, j), space in sorted(result.tables.items())
    ]
    return TransferReport(
        edge=result.edge,
        source=result.source.label,
        target=result.target.label,
        source_grading=_int_grading(deg),
        degrees=result.as_dict(),
        alternatives=[_int_grading(a) for a in result.alternatives],
        hom=hom,
    )


# H_r and outer automorphisms


def parse_hr(text: str, field: GaloisField, r: int) -> HrElement:
    """An H_r element from "1,0,1"."""
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise ValueError(f"Invalid H_r element {text!r}; expected comma-separated integers") from e
    if len(values) != r:
        raise ValueError(f"H_r element {text!r} has {len(values)} coordinates, expected {r}")
    return HrElement.from_ints(field, values)


def hr_report(operation: str, operands: list[str], r: int, field: GaloisField) -> HrReport:
    elements = [parse_hr(text, field, r) for text in operands]
    if operation == "mul":
        if len(elements) != 2:
            raise ValueError("hr mul takes two elements")
        result = hr_mul(elements[0], elements[1])
    else:
        if len(elements) != 1:
            raise ValueError("hr inv takes one element")
        result = hr_inverse(elements[0])
    return HrReport(
        operation=operation,
        r=r,
        field=field_label(field),
        operands=[e.as_ints() for e in elements],
        result=result.as_ints(),
    )


def load_images(path: str, pres: AlgebraPresentation) -> Endomorphism:
    """
    Read generator images from YAML:

        arrows:
          alpha: "alpha + alpha*beta*gamma"
        vertices: {}

    Raises:
        FileNotFoundError: If the file doesn't exist
        ValueError: If the YAML is invalid or not a mapping
    """
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except FileNotFoundError:
        logger.error(f"Image file not found: {path}")
        raise
    except yaml.YAMLError as e:
        raise ValueError(f"Invalid YAML in image file {path}: {e}") from e
    if not isinstance(data, dict):
        raise ValueError(f"Image file {path} must hold a mapping")

    arrows = {str(k): parse_expression(str(v), pres) for k, v in (data.get("arrows") or {}).items()}
    vertices = {
        str(k): parse_expression(str(v), pres) for k, v in (data.get("vertices") or {}).items()
    }
    return Endomorphism.from_images(pres, arrows, vertices or None)


def out_report(operation: str, pres: AlgebraPresentation, paths: list[str]) -> OutReport:
    expected = 2 if operation == "mul" else 1
    if len(paths) != expected:
        raise ValueError(f"out {operation} takes {expected} image file(s)")
    tuples: list[OuterTuple] = [normalize_outer(pres, load_images(p, pres)) for p in paths]
    result = outer_mul(pres, tuples[0], tuples[1]) if operation == "mul" else tuples[0]
    return OutReport(
        operation=operation,
        family=pres.block.family,
        field=field_label(pres.field),
        result=result.as_ints(),
        operands=[t.as_ints() for t in tuples] if operation == "mul" else [],
    )


# Summary table


def table_row(block: BlockId, field_degree: int) -> TableRow:
    """One cell of the summary sweep; pure, so it can run in a worker process."""
    pres = make_block(block, field_of(field_degree))
    torus = maximal_torus_rank(block)
    lattice = grading_lattice(pres)
    positive = positive_grading_exists(pres) is not None
    tight = tightness(pres).is_tight

    expected = known_profile(block).at(block.r)
    mismatches = []
    if (lattice.rank > 0) != expected.nontrivial_grading:
        mismatches.append(
            f"nontrivial grading: computed {lattice.rank > 0}, known {expected.nontrivial_grading}"
        )
    if positive != expected.positive:
        mismatches.append(f"positive: computed {positive}, known {expected.positive}")
    if tight is None:
        mismatches.append("tight: undecided")
    elif tight != expected.tight:
        mismatches.append(f"tight: computed {tight}, known {expected.tight}")
    if lattice.rank != expected.torus_rank:
        mismatches.append(f"rank H/B: computed {lattice.rank}, known {expected.torus_rank}")
    if torus != expected.torus_rank:
        mismatches.append(f"torus rank: computed {torus}, known {expected.torus_rank}")

    logger.info(
        "Table cell",
        extra={"family": block.family, "r": block.r, "c": block.c, "mismatches": len(mismatches)},
    )
    return TableRow(
        block=block.label,
        nontrivial_grading=lattice.rank > 0,
        positive=positive,
        tight=tight,
        torus_rank=torus,
        lattice_rank=lattice.rank,
        mismatches=mismatches,
    )


def table_report(r_max: int, field: GaloisField, workers: int = 1) -> TableReport:
    blocks = all_blocks(r_max)
    degrees = [field.degree] * len(blocks)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(table_row, blocks, degrees))
    else:
        rows = [table_row(b, d) for b, d in zip(blocks, degrees)]
    mismatches = sum(1 for row in rows if row.mismatches)
    return TableReport(r_max=r_max, field=field_label(field), rows=rows, mismatches=mismatches)


# Dispatch


def run(args: argparse.Namespace) -> tuple[Report, int]:
    """
    Execute one command.

    Returns:
        (report, exit code)

    Raises:
        GqaError, DslSyntaxError, ValueError, FileNotFoundError: reported by main as exit 2
    """
    command = args.command
    field = resolve_field(args)

    if command == "hr":
        if args.r is None:
            raise ValueError("hr needs --r")
        return hr_report(args.action, args.elements, args.r, field), 0
    if command == "table":
        r_max = args.r_max or load_settings().table.r_max
        workers = args.workers or load_settings().table.workers
        report = table_report(r_max, field, workers)
        return report, 1 if report.mismatches else 0

    default_family = get_edge(args.edge).source if command == "transfer" else None
    manifest = resolve_manifest(args, default_family)
    pres = manifest.presentation(field)
    if command == "basis":
        return basis_report(pres), 0
    if command == "dim":
        return dim_report(pres), 0
    if command == "layers":
        return layers_report(pres, resolve_grading(args.grading, pres, manifest)), 0
    if command == "grade":
        if args.action == "lattice":
            return lattice_report(pres), 0
        if args.action == "positive":
            return positive_report(pres), 0
        if args.action == "tight":
            return tight_report(pres), 0
        deg = resolve_grading(args.grading, pres, manifest)
        if deg is None:
            raise QuiverError("grade check needs --grading or a grading block")
        return check_report(pres, deg), 0
    if command == "transfer":
        if not pres.is_catalog:
            raise TransferError(f"{pres.name} is not a catalog block; transfers need one")
        deg = resolve_grading(args.grading, pres, manifest)
        if deg is None:
            raise QuiverError("transfer needs --grading or a grading block")
        return transfer_report(args.edge, pres, deg), 0
    if command == "out":
        if not pres.is_catalog:
            raise GqaError(f"{pres.name} is not a catalog block")
        return out_report(args.action, pres, args.images), 0
    raise ValueError(f"Unknown command {command!r}")


def printed_manifest(args: argparse.Namespace) -> str:
    return print_manifest(resolve_manifest(args))


def error_report(error: Exception) -> ErrorReport:
    return ErrorReport(
        error=type(error).__name__,
        message=str(error),
        line=getattr(error, "line", None),
        column=getattr(error, "column", None),
        expected=list(getattr(error, "expected", []) or []),
    )


# Text rendering


def _mark(value: Optional[bool]) -> str:
    if value is None:
        return "?"
    return "yes" if value else "no"


@singledispatch
def render_text(report: Report) -> str:
    return report.model_dump_json(indent=2)


@render_text.register
def _(report: BasisReport) -> str:
    lines = [f"{report.algebra} over {report.field}: dim {report.dimension}, {report.rules} rules"]
    lines.extend(f"  {p}" for p in report.basis)
    return "\n".join(lines)


@render_text.register
def _(report: DimReport) -> str:
    lines = [f"{report.algebra}: dim {report.dimension}"]
    lines.extend(f"  dim P{v} = {n}" for v, n in report.projectives.items())
    lines.append("  Cartan (dim e_i A e_j):")
    lines.extend(f"    {e.source} -> {e.target}: {e.dimension}" for e in report.cartan)
    return "\n".join(lines)


@render_text.register
def _(report: LayersReport) -> str:
    lines = [f"{report.algebra} radical layers" + (" (graded)" if report.graded else "")]
    for projective in report.projectives:
        lines.append(f"P{projective.vertex}:")
        for layer in projective.layers:
            items = [
                f"S{e.simple}" if e.degree is None else f"S{e.simple}@{e.degree}" for e in layer
            ]
            lines.append("  " + " ".join(items))
    return "\n".join(lines)


@render_text.register
def _(report: LatticeReport) -> str:
    lines = [
        f"{report.algebra}: rank H = {report.rank_h}, rank B = {report.rank_b}, "
        f"rank H/B = {report.rank}",
        f"  arrows: {', '.join(report.arrows)}",
    ]
    if report.torsion:
        lines.append(f"  torsion: {report.torsion}")
    lines.extend(f"  generator: {v}" for v in report.basis)
    return "\n".join(lines)


@render_text.register
def _(report: CheckReport) -> str:
    lines = [f"{report.algebra}: {'homogeneous' if report.homogeneous else 'not homogeneous'}"]
    if report.cocharacter is not None:
        lines.append(f"  class in H/B: {report.cocharacter}")
    if report.torsion:
        lines.append(f"  torsion part: {report.torsion}")
    lines.extend(f"  negative cycle: {w}" for w in report.negative_cycles)
    return "\n".join(lines)


@render_text.register
def _(report: PositiveReport) -> str:
    lines = [f"{report.algebra}: positive grading {'exists' if report.positive else 'does not exist'}"]
    if report.witness is not None:
        lines.append("  witness: " + ", ".join(f"{a}={d}" for a, d in report.witness.items()))
    return "\n".join(lines)


@render_text.register
def _(report: TightReport) -> str:
    lines = [f"{report.algebra}: {report.verdict.upper()}"]
    lines.extend(f"  {reason}" for reason in report.trace)
    return "\n".join(lines)


@render_text.register
def _(report: TransferReport) -> str:
    lines = [f"{report.edge}: {report.source} -> {report.target}"]
    lines.append("  " + ", ".join(f"{a}={d}" for a, d in report.degrees.items()))
    for alternative in report.alternatives:
        lines.append("  alternative: " + ", ".join(f"{a}={d}" for a, d in alternative.items()))
    return "\n".join(lines)


@render_text.register
def _(report: HrReport) -> str:
    operands = " * ".join(str(tuple(o)) for o in report.operands)
    name = "inverse of " if report.operation == "inv" else ""
    return f"H_{report.r} over {report.field}: {name}{operands} = {tuple(report.result)}"


@render_text.register
def _(report: OutReport) -> str:
    return f"Out({report.family}) {report.operation} over {report.field}: {report.result}"


@render_text.register
def _(report: TableReport) -> str:
    lines = [f"{'block':<14} {'graded':>6} {'pos':>4} {'tight':>5} {'H/B':>4} {'torus':>5}  status"]
    for row in report.rows:
        status = "ok" if row.matches else "MISMATCH: " + "; ".join(row.mismatches)
        lines.append(
            f"{row.block:<14} {_mark(row.nontrivial_grading):>6} {_mark(row.positive):>4} "
            f"{_mark(row.tight):>5} {row.lattice_rank:>4} {row.torus_rank:>5}  {status}"
        )
    lines.append(f"{len(report.rows)} rows, {report.mismatches} mismatches")
    return "\n".join(lines)


@render_text.register
def _(report: ErrorReport) -> str:
    return f"{report.error}: {report.message}"


__all__ = [
    "basis_report",
    "check_report",
    "dim_report",
    "error_report",
    "hr_report",
    "lattice_report",
    "layers_report",
    "load_images",
    "out_report",
    "positive_report",
    "printed_manifest",
    "render_text",
    "resolve_field",
    "resolve_grading",
    "resolve_manifest",
    "run",
    "table_report",
    "table_row",
    "tight_report",
    "transfer_report",
]
