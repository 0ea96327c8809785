"""
Exact Linear Algebra over GF(2^m)

Sparse vectors are dicts mapping a hashable coordinate to a nonzero field
element. EchelonBasis keeps a fully reduced row echelon form incrementally,
which is what radical filtrations, automorphism rank checks and homotopy
quotients all need: "is this vector new?" and "what is the rank?".
"""

from __future__ import annotations

from typing import Any, Callable, Hashable, Iterable, Mapping, Optional

from .field import FieldElement, GaloisField

SparseVector = dict[Hashable, FieldElement]


def axpy(target: SparseVector, scalar: FieldElement, source: Mapping[Hashable, FieldElement]) -> None:
    """target += scalar * source, in place, dropping zeros."""
    if not scalar:
        return
    for key, value in source.items():
        updated = target.get(key)
        product = scalar * value
        if updated is None:
            if product:
                target[key] = product
        else:
            updated = updated + product
            if updated:
                target[key] = updated
            else:
                del target[key]


class EchelonBasis:
    """
    Incremental reduced row echelon form over a finite field.

    Args:
        field: coefficient field
        key: sort key for coordinates; the pivot of a row is its largest coordinate

    Example:
        >>> basis = EchelonBasis(gf)
        >>> basis.add({"x": gf.one})
        True
        >>> basis.add({"x": gf.one})
        False
    """

    def __init__(self, field: GaloisField, key: Optional[Callable[[Any], Any]] = None):
        self.field = field
        self._key = key
        self._rows: dict[Hashable, SparseVector] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[Hashable]:
        return list(self._rows)

    def rows(self) -> list[SparseVector]:
        return [dict(row) for row in self._rows.values()]

    def reduce(self, vector: Mapping[Hashable, FieldElement]) -> SparseVector:
        """Return vector minus its projection onto the span (the echelon residual)."""
        residual: SparseVector = {k: v for k, v in vector.items() if v}
        for pivot, row in self._rows.items():
            coefficient = residual.get(pivot)
            if coefficient:
                axpy(residual, coefficient, row)
        return residual

    def contains(self, vector: Mapping[Hashable, FieldElement]) -> bool:
        return not self.reduce(vector)

    def add(self, vector: Mapping[Hashable, FieldElement]) -> bool:
        """Add vector to the span; return True iff it was independent."""
        residual = self.reduce(vector)
        if not residual:
            return False
        pivot = max(residual, key=self._key) if self._key else max(residual)
        scale = residual[pivot].inverse()
        residual = {k: v * scale for k, v in residual.items()}
        for row in self._rows.values():
            coefficient = row.get(pivot)
            if coefficient:
                axpy(row, coefficient, residual)
        self._rows[pivot] = residual
        return True

    def extend(self, vectors: Iterable[Mapping[Hashable, FieldElement]]) -> int:
        """Add several vectors; return how many were independent."""
        return sum(1 for vector in vectors if self.add(vector))


def rank(vectors: Iterable[Mapping[Hashable, FieldElement]], field: GaloisField) -> int:
    basis = EchelonBasis(field, key=repr)
    basis.extend(vectors)
    return basis.rank


def nullspace(
    columns: Mapping[Hashable, Mapping[Hashable, FieldElement]],
    field: GaloisField,
) -> list[SparseVector]:
    """
    Kernel of a linear map given column by column.

    Args:
        columns: variable -> image vector (sparse)

    Returns:
        basis of {x : sum_v x_v * columns[v] = 0}, each vector keyed by variable
    """
    # Row-reduce [image | identity]; rows whose image part vanishes span the kernel.
    tagged = EchelonBasis(field, key=_image_first)
    kernel: list[SparseVector] = []
    for variable, image in columns.items():
        row: SparseVector = {("image", k): v for k, v in image.items() if v}
        row[("var", variable)] = field.one
        residual = tagged.reduce(row)
        if any(k[0] == "image" for k in residual):
            tagged.add(residual)
        else:
            kernel.append({k[1]: v for k, v in residual.items()})
    return kernel


def _image_first(coordinate: tuple[str, Hashable]) -> tuple[int, str]:
    kind, key = coordinate
    return (1 if kind == "image" else 0, repr(key))


__all__ = ["EchelonBasis", "SparseVector", "axpy", "nullspace", "rank"]
