"""
DGKIT COMPLEXES

Finite cochain complexes over a coefficient field.

A Complex keeps one flat basis (each vector tagged with its degree) and the
full differential as one square matrix; per-degree components d^n are cut
out of it on demand. The flat layout makes totalizations cheap to assemble.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from src.config import get_settings
from src.contracts.errors import DegreeWindowError, ShapeMismatchError
from src.lattice.field import CoefficientField, FieldMatrix, SparseVector, add_scaled

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Complex:
    """
    Finite-dimensional cochain complex.

    degrees[i] is the degree of basis vector i; column j of differential is
    d(e_j). The differential must raise degree by exactly one. d² = 0 is
    checked by d_squared_zero(), not on construction.
    """
    field: CoefficientField
    degrees: tuple[int, ...]
    differential: FieldMatrix
    names: tuple[str, ...] = ()
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        n = len(self.degrees)
        if self.differential.shape != (n, n):
            raise ShapeMismatchError(
                f"differential of shape {self.differential.shape} on {n} basis vectors"
            )
        if self.names and len(self.names) != n:
            raise ShapeMismatchError(f"{len(self.names)} names for {n} basis vectors")
        for i, row in enumerate(self.differential.data):
            for j, x in enumerate(row):
                if x and self.degrees[i] != self.degrees[j] + 1:
                    raise ShapeMismatchError(
                        f"differential sends degree {self.degrees[j]} to {self.degrees[i]}"
                    )
        if n:
            span = max(self.degrees) - min(self.degrees)
            limit = get_settings().max_degree_span
            if span > limit:
                raise DegreeWindowError(f"complex spans {span} degrees, window allows {limit}")

    # ─── Construction ─────────────────────────────────────────────────────────

    @classmethod
    def zero(cls, field: CoefficientField) -> "Complex":
        return cls(field, (), FieldMatrix.zeros(field, 0, 0))

    @classmethod
    def concentrated(cls, field: CoefficientField, degree: int, dim: int) -> "Complex":
        """k^dim in a single degree with zero differential."""
        return cls(field, (degree,) * dim, FieldMatrix.zeros(field, dim, dim))

    @classmethod
    def from_sparse(cls, field: CoefficientField, degrees: Sequence[int],
                    columns: Mapping[int, SparseVector], names: Sequence[str] = ()) -> "Complex":
        """Build from d(e_j) given as sparse columns; missing columns are zero."""
        n = len(degrees)
        cols = [dict(columns.get(j, {})) for j in range(n)]
        return cls(field, tuple(degrees), FieldMatrix.from_sparse_columns(field, cols, n), tuple(names))

    @classmethod
    def from_components(cls, field: CoefficientField, dims: Mapping[int, int],
                        components: Mapping[int, FieldMatrix]) -> "Complex":
        """
        Build from per-degree dimensions and components d^n: C^n → C^{n+1}.

        Components absent from the mapping are zero.
        """
        order = sorted(d for d, k in dims.items() if k)
        offset, degrees = {}, []
        for deg in order:
            offset[deg] = len(degrees)
            degrees.extend([deg] * dims[deg])
        columns: dict[int, SparseVector] = {}
        for deg, comp in components.items():
            if comp.shape != (dims.get(deg + 1, 0), dims.get(deg, 0)):
                raise ShapeMismatchError(f"component d^{deg} has shape {comp.shape}")
            for j in range(comp.cols):
                col = {offset[deg + 1] + i: v for i, v in comp.sparse_column(j).items()}
                if col:
                    columns[offset[deg] + j] = col
        return cls.from_sparse(field, degrees, columns)

    # ─── Access ───────────────────────────────────────────────────────────────

    @property
    def total_dimension(self) -> int:
        return len(self.degrees)

    @property
    def window(self) -> Optional[tuple[int, int]]:
        """Lowest and highest occupied degree, None for the zero complex."""
        if not self.degrees:
            return None
        return (min(self.degrees), max(self.degrees))

    def indices(self, n: int) -> tuple[int, ...]:
        key = ("indices", n)
        if key not in self._cache:
            self._cache[key] = tuple(i for i, d in enumerate(self.degrees) if d == n)
        return self._cache[key]

    def dimension(self, n: int) -> int:
        return len(self.indices(n))

    def occupied_degrees(self) -> list[int]:
        return sorted(set(self.degrees))

    def component(self, n: int) -> FieldMatrix:
        """d^n as a dim(n+1) × dim(n) matrix in the order of indices()."""
        return self.differential.submatrix(self.indices(n + 1), self.indices(n))

    def d(self, x: SparseVector) -> SparseVector:
        out: SparseVector = {}
        for j, c in x.items():
            add_scaled(out, self.differential.sparse_column(j), c)
        return out

    # ─── Checks ───────────────────────────────────────────────────────────────

    def d_squared_zero(self) -> bool:
        if not self.degrees:
            return True
        return (self.differential @ self.differential).is_zero()

    def euler_characteristic(self) -> int:
        return sum(-1 if d % 2 else 1 for d in self.degrees)

    def shifted(self, n: int) -> "Complex":
        """C[n]: degrees lowered by n, differential scaled by (-1)^n."""
        sign = self.field.sign(n)
        data = tuple(tuple(sign * x for x in row) for row in self.differential.data)
        return Complex(
            self.field,
            tuple(d - n for d in self.degrees),
            FieldMatrix(self.field, self.differential.rows, self.differential.cols, data),
            self.names,
        )
