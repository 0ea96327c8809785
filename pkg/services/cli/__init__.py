"""
CLI

The algebra description language, pydantic JSON reports and the `gqa`
command-line entry point.
"""

from .dsl import Manifest, catalog_manifest, parse, parse_expression, print_manifest
from .main import main
from .reports import SCHEMA_VERSION, report_schemas

__version__ = "1.0.0"

__all__ = [
    "SCHEMA_VERSION",
    "Manifest",
    "catalog_manifest",
    "main",
    "parse",
    "parse_expression",
    "print_manifest",
    "report_schemas",
]
