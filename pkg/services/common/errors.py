"""
Exception Hierarchy

All failures raised by the graded-quiver-algebras services derive from
GqaError so the CLI can map them to exit codes in one place. Each subclass
names one family of failure; callers should catch the narrowest one they
can handle.
"""

from __future__ import annotations

from typing import Any, Optional, Sequence


class GqaError(Exception):
    """Base class for all toolkit errors."""

    pass


class FieldError(GqaError):
    """Unsupported field degree, cross-field arithmetic or an invalid literal."""

    pass


class QuiverError(GqaError):
    """Structural problem: unknown vertex or arrow, mismatched quivers, non-parallel relation."""

    pass


class NotFiniteDimensionalError(QuiverError):
    """Completion or basis enumeration ran past its saturation guard."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class InhomogeneousGradingError(GqaError):
    """A degree assignment does not lie in the homogeneity lattice."""

    pass


class CriterionInapplicableError(GqaError):
    """A positivity or tightness criterion was asked about an unsupported quiver."""

    pass


class InvalidBlockError(GqaError):
    """Block identifier with an unknown family or out-of-range parameters."""

    pass


class AutomorphismError(GqaError):
    """Invalid endomorphism, non-invertible unit, or a failed normalization."""

    pass


class ComplexError(GqaError):
    """Malformed or inhomogeneous complex of projectives."""

    pass


class TransferError(GqaError):
    """Unknown transfer edge or a transfer applied outside the catalog."""

    pass


class AmbiguousAssignmentError(TransferError):
    """Several arrow-degree assignments are consistent with the graded Hom data."""

    def __init__(self, message: str, candidates: Sequence[dict[str, int]]):
        super().__init__(message)
        self.candidates = list(candidates)


class DslSyntaxError(GqaError):
    """
    Parse diagnostic for the algebra description language.

    Attributes:
        line: 1-based line of the offending token
        column: 1-based column of the offending token
        expected: sorted set of token kinds that would have been accepted
    """

    def __init__(
        self,
        message: str,
        line: int,
        column: int,
        expected: Optional[Sequence[str]] = None,
    ):
        self.line = line
        self.column = column
        self.expected = sorted(set(expected or ()))
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
        self.message = message
