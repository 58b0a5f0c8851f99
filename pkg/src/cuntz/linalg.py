"""Exact span membership over the Gaussian rationals.

Vectors are sparse dicts mapping a hashable coordinate to a nonzero ComplexQ.
"""
from __future__ import annotations

from typing import Dict, Hashable, Iterable

from .scalars import ComplexQ

Vector = Dict[Hashable, ComplexQ]


class EchelonBasis:
    """Incremental row-echelon basis; each pivot row has coefficient 1 at its pivot."""

    def __init__(self):
        self._rows: Dict[Hashable, Vector] = {}

    def __len__(self):
        return len(self._rows)

    def reduce(self, vec: Vector) -> Vector:
        v = {key: c for key, c in vec.items() if c}
        # eliminate pivots until none remain; each step removes one pivot key
        while True:
            hit = next((key for key in v if key in self._rows), None)
            if hit is None:
                return v
            factor = v[hit]
            for key, c in self._rows[hit].items():
                new = v.get(key, ComplexQ(0)) - factor * c
                if new:
                    v[key] = new
                else:
                    v.pop(key, None)

    def add(self, vec: Vector) -> bool:
        """Insert vec; returns True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v, key=repr)
        scale = v[pivot]
        row = {key: c / scale for key, c in v.items()}
        # keep rows fully reduced against the new pivot
        for other_pivot, other in self._rows.items():
            f = other.get(pivot)
            if f:
                for key, c in row.items():
                    new = other.get(key, ComplexQ(0)) - f * c
                    if new:
                        other[key] = new
                    else:
                        other.pop(key, None)
        self._rows[pivot] = row
        return True

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)


def in_span(vectors: Iterable[Vector], target: Vector) -> bool:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return basis.contains(target)
