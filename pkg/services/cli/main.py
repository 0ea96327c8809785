"""
gqa - Main Entry Point

Command-line interface for graded quiver algebras over GF(2^m).

Usage:
    python -m services.cli.main COMMAND [OPTIONS]

Commands:
    basis                       Normal-form basis of the algebra
    dim                         Dimension and Cartan data
    layers [--grading G]        Radical layers of the projectives
    grade lattice|check|positive|tight
                                Homogeneity lattice, grading check, positivity, tightness
    transfer --edge E           Move a grading along A-B, B-C or D2A-D2B
    hr mul|inv ELEMENTS         Arithmetic in H_r (needs --r)
    out normalize|mul FILES     Normalized outer coordinates from YAML image files
    table [--r-max N]           Summary grid, diffed against config/known_profiles.yml
    schema                      JSON schema of every report
    print                       Canonical text of the selected manifest

Options:
    -m, --manifest PATH   Algebra manifest (.gqa)
    --family F            Catalog family (A, B, C, D2A, D2B, D1C)
    --r N                 Catalog parameter r
    --c K                 Catalog parameter c (D2A, D2B)
    --field gf2^m         Coefficient field (default: GQA_FIELD or config/gqa.yml)
    --json                Emit a JSON report on stdout
    --verbose             Enable debug logging

Examples:
    # Degrees of B_2 induced by the tight grading of A_2:
    python -m services.cli.main transfer --edge A-B --r 2 --grading tight --json

    # Tightness verdict with its obstruction:
    python -m services.cli.main grade tight --family B --r 2

    # Summary grid on four workers:
    python -m services.cli.main table --r-max 5 --workers 4

Exit Codes:
    0: Success (table: every row matches)
    1: Table mismatch
    2: Usage, parse or input error
"""

import argparse
import json
import logging
import sys
from typing import Optional

from dotenv import load_dotenv

from services.common.errors import DslSyntaxError, GqaError

from .commands import error_report, printed_manifest, render_text, run
from .reports import report_schemas

logger = logging.getLogger(__name__)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-m', '--manifest', type=str, default=None, help='Algebra manifest (.gqa)')
    common.add_argument('--family', type=str, default=None, help='Catalog family')
    common.add_argument('--r', type=int, default=None, help='Catalog parameter r')
    common.add_argument('--c', type=int, default=None, help='Catalog parameter c (D2A, D2B)')
    common.add_argument('--field', type=str, default=None, help='Coefficient field, e.g. gf2^2')
    common.add_argument('--json', action='store_true', help='Emit a JSON report')
    common.add_argument('--verbose', action='store_true', help='Enable debug logging')
    return common


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subcommand per command."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='gqa',
        description='Graded quiver algebras of dihedral blocks in characteristic 2',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__.split('Examples:')[1].split('Exit Codes:')[0],
    )
    sub = parser.add_subparsers(dest='command', required=True)

    sub.add_parser('basis', parents=[common], help='Normal-form basis')
    sub.add_parser('dim', parents=[common], help='Dimension and Cartan data')
    layers = sub.add_parser('layers', parents=[common], help='Radical layers')
    layers.add_argument(
        '--grading', type=str, default=None,
        help="'tight', 'symbolic', 'a1=1,b1=2,...' or a file with a grading block",
    )

    grade = sub.add_parser('grade', parents=[common], help='Grading queries')
    grade.add_argument('action', choices=['lattice', 'check', 'positive', 'tight'])
    grade.add_argument('--grading', type=str, default=None, help='Grading for check')

    transfer = sub.add_parser('transfer', parents=[common], help='Transfer a grading')
    transfer.add_argument('--edge', type=str, required=True, help='A-B, B-C or D2A-D2B')
    transfer.add_argument('--grading', type=str, default=None, help="'tight', inline list or file")

    hr = sub.add_parser('hr', parents=[common], help='H_r arithmetic')
    hr.add_argument('action', choices=['mul', 'inv'])
    hr.add_argument('elements', nargs='+', help='Comma-separated coordinates, e.g. 1,0,1')

    out = sub.add_parser('out', parents=[common], help='Outer automorphism coordinates')
    out.add_argument('action', choices=['normalize', 'mul'])
    out.add_argument('images', nargs='+', help='YAML files with generator images')

    table = sub.add_parser('table', parents=[common], help='Summary grid')
    table.add_argument('--r-max', type=int, default=None, help='Largest r (default: config)')
    table.add_argument('--workers', type=int, default=None, help='Worker processes')

    sub.add_parser('schema', parents=[common], help='JSON schema of all reports')
    sub.add_parser('print', parents=[common], help='Canonical manifest text')
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def main(argv: Optional[list[str]] = None) -> int:
    """
    Main entry point.

    Returns:
        Exit code (0 = success, 1 = table mismatch, 2 = usage or input error)
    """
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    _configure_logging(args.verbose)

    if args.command == 'schema':
        print(json.dumps(report_schemas(), indent=2))
        return 0

    try:
        if args.command == 'print':
            sys.stdout.write(printed_manifest(args))
            return 0
        report, code = run(args)
    except DslSyntaxError as e:
        logger.error(f"Parse error: {e}")
        _emit_error(e, args.json)
        return 2
    except (GqaError, ValueError, FileNotFoundError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        _emit_error(e, args.json)
        return 2

    print(report.model_dump_json(indent=2) if args.json else render_text(report))
    if code == 1:
        logger.warning("Summary table differs from the known profiles")
    return code


def _emit_error(error: Exception, as_json: bool) -> None:
    if as_json:
        print(error_report(error).model_dump_json(indent=2))


if __name__ == "__main__":
    sys.exit(main())
