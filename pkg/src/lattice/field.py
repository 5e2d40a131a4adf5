"""
DGKIT COEFFICIENT FIELDS

Exact field arithmetic for all category-level linear algebra.

A CoefficientField wraps a sympy domain (QQ or GF(p)); FieldMatrix stores
domain elements and delegates elimination to sympy's DomainMatrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Sequence

import sympy as sp
from sympy.polys.domains import QQ, GF
from sympy.polys.matrices import DomainMatrix

from src.contracts.errors import ShapeMismatchError

# Sparse vector: basis index -> nonzero field element
SparseVector = dict[int, Any]


# ═══════════════════════════════════════════════════════════════════════════
# COEFFICIENT FIELD
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class CoefficientField:
    """The rationals (characteristic 0) or a prime field F_p."""
    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not sp.isprime(p):
            raise ValueError(f"F_p needs a prime, got {p}")

    @classmethod
    def parse(cls, label: str) -> "CoefficientField":
        """Parse "Q" or "Fp:<prime>"."""
        label = label.strip()
        if label == "Q":
            return cls(0)
        if label.startswith("Fp:"):
            try:
                return cls(int(label[3:]))
            except ValueError as e:
                raise ValueError(f"bad field label {label!r}") from e
        raise ValueError(f"field must be 'Q' or 'Fp:<prime>', got {label!r}")

    @property
    def label(self) -> str:
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    @cached_property
    def domain(self):
        return QQ if self.characteristic == 0 else GF(self.characteristic)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def convert(self, value: Any):
        """Convert an int, a string such as "-3/2", or a sympy number."""
        r = sp.Rational(value) if not isinstance(value, sp.Rational) else value
        return self.domain.convert(int(r.p)) / self.domain.convert(int(r.q))

    def sign(self, exponent: int):
        """(-1)^exponent as a field element."""
        return self.one if exponent % 2 == 0 else -self.one

    def to_string(self, x: Any) -> str:
        value = self.domain.to_sympy(x)
        if self.characteristic:
            return str(int(value) % self.characteristic)
        return str(value)


# ═══════════════════════════════════════════════════════════════════════════
# SPARSE VECTOR HELPERS
# ═══════════════════════════════════════════════════════════════════════════

def add_scaled(acc: SparseVector, vec: SparseVector, scale: Any) -> None:
    """acc += scale * vec, dropping zeros."""
    if not scale:
        return
    for k, v in vec.items():
        total = acc.get(k, 0 * scale) + scale * v
        if total:
            acc[k] = total
        else:
            acc.pop(k, None)


def scaled(vec: SparseVector, scale: Any) -> SparseVector:
    out: SparseVector = {}
    add_scaled(out, vec, scale)
    return out


# ═══════════════════════════════════════════════════════════════════════════
# FIELD MATRIX
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class FieldMatrix:
    """Immutable dense matrix over a coefficient field."""
    field: CoefficientField
    rows: int
    cols: int
    data: tuple[tuple[Any, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ShapeMismatchError(f"data does not fill a {self.rows}x{self.cols} matrix")

    @classmethod
    def zeros(cls, field: CoefficientField, rows: int, cols: int) -> "FieldMatrix":
        z = field.zero
        return cls(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: CoefficientField, n: int) -> "FieldMatrix":
        return cls(field, n, n, tuple(
            tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)
        ))

    @classmethod
    def from_rows(cls, field: CoefficientField, rows: Sequence[Sequence[Any]],
                  cols: int | None = None) -> "FieldMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(field, len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, field: CoefficientField, columns: Sequence[Sequence[Any]],
                     rows: int) -> "FieldMatrix":
        return cls(field, rows, len(columns), tuple(
            tuple(c[i] for c in columns) for i in range(rows)
        ))

    @classmethod
    def from_sparse_columns(cls, field: CoefficientField, columns: Sequence[SparseVector],
                            rows: int) -> "FieldMatrix":
        z = field.zero
        grid = [[z] * len(columns) for _ in range(rows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                grid[i][j] = v
        return cls(field, rows, len(columns), tuple(tuple(r) for r in grid))

    @classmethod
    def from_domain_matrix(cls, field: CoefficientField, m: DomainMatrix) -> "FieldMatrix":
        rows, cols = m.shape
        dense = m.to_Matrix()
        return cls(field, rows, cols, tuple(
            tuple(field.domain.from_sympy(dense[i, j]) for j in range(cols)) for i in range(rows)
        ))

    # ─── Access ───────────────────────────────────────────────────────────────

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def column(self, j: int) -> tuple[Any, ...]:
        return tuple(r[j] for r in self.data)

    def sparse_column(self, j: int) -> SparseVector:
        return {i: r[j] for i, r in enumerate(self.data) if r[j]}

    def is_zero(self) -> bool:
        return not any(x for r in self.data for x in r)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(r) for r in self.data], (self.rows, self.cols), self.field.domain)

    # ─── Arithmetic ───────────────────────────────────────────────────────────

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.cols != other.rows:
            raise ShapeMismatchError(f"cannot compose {self.shape} with {other.shape}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return FieldMatrix.zeros(self.field, self.rows, other.cols)
        product = self.to_domain_matrix() * other.to_domain_matrix()
        return FieldMatrix.from_domain_matrix(self.field, product)

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self.cols, self.rows, tuple(
            tuple(self.data[i][j] for i in range(self.rows)) for j in range(self.cols)
        ))

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "FieldMatrix":
        return FieldMatrix(self.field, len(row_indices), len(col_indices), tuple(
            tuple(self.data[i][j] for j in col_indices) for i in row_indices
        ))

    # ─── Elimination ──────────────────────────────────────────────────────────

    def rref(self) -> tuple["FieldMatrix", tuple[int, ...]]:
        """Reduced row echelon form and pivot columns."""
        if self.rows == 0 or self.cols == 0 or self.is_zero():
            return FieldMatrix.zeros(self.field, self.rows, self.cols), ()
        reduced, pivots = self.to_domain_matrix().rref()
        return FieldMatrix.from_domain_matrix(self.field, reduced), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[tuple[Any, ...]]:
        """Basis of {v : M v = 0}, one vector per free column."""
        reduced, pivots = self.rref()
        basis = []
        for free in range(self.cols):
            if free in pivots:
                continue
            v = [self.field.zero] * self.cols
            v[free] = self.field.one
            for i, p in enumerate(pivots):
                v[p] = -reduced.data[i][free]
            basis.append(tuple(v))
        return basis


def independent_subset(field: CoefficientField, vectors: Sequence[Sequence[Any]],
                       length: int) -> list[int]:
    """Indices of a greedy left-to-right maximal independent subfamily."""
    if not vectors:
        return []
    return list(FieldMatrix.from_columns(field, vectors, length).rref()[1])


def dense(vec: SparseVector, length: int, field: CoefficientField) -> tuple[Any, ...]:
    return tuple(vec.get(i, field.zero) for i in range(length))


def sparse(vec: Iterable[Any]) -> SparseVector:
    return {i: v for i, v in enumerate(vec) if v}
