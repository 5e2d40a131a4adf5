"""
DGKIT INTEGER MATRICES

Exact integer matrices with Python's arbitrary-precision ints.

Houses the matrices of i*, q* and Gram matrices of the Euler pairing.
Vectors act as columns: M @ v.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import sympy as sp

from src.contracts.errors import ShapeMismatchError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable rows × cols integer matrix, row-major entries."""
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatchError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatchError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    # ─── Construction ─────────────────────────────────────────────────────────

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        """Build from a list of rows. cols is required when rows is empty."""
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeMismatchError(f"ragged row of length {len(r)}, expected {cols}")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        """Build from column vectors of length rows."""
        for c in columns:
            if len(c) != rows:
                raise ShapeMismatchError(f"column of length {len(c)}, expected {rows}")
        return cls.from_rows(
            [[int(c[i]) for c in columns] for i in range(rows)], cols=len(columns)
        )

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def from_sympy(cls, m: sp.Matrix) -> "IntMatrix":
        entries = []
        for x in m:
            if not x.is_integer:
                raise ValueError(f"non-integral entry {x}")
            entries.append(int(x))
        return cls(m.rows, m.cols, tuple(entries))

    # ─── Access ───────────────────────────────────────────────────────────────

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def to_sympy(self) -> sp.Matrix:
        return sp.Matrix(self.rows, self.cols, list(self.entries))

    # ─── Arithmetic ───────────────────────────────────────────────────────────

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([list(self.column(j)) for j in range(self.cols)], cols=self.rows)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum(r[k] * other.entries[k * other.cols + j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ShapeMismatchError(f"vector of length {len(vector)} for {self.cols} columns")
        return tuple(
            sum(self.entries[i * self.cols + k] * vector[k] for k in range(self.cols))
            for i in range(self.rows)
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ShapeMismatchError(f"cannot add {self.shape} and {other.shape}")
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ShapeMismatchError(f"cannot stack {self.shape} beside {other.shape}")
        return IntMatrix.from_rows(
            [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)],
            cols=self.cols + other.cols,
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # ─── Exact invariants (sympy) ─────────────────────────────────────────────

    def determinant(self) -> int:
        if not self.is_square():
            raise ShapeMismatchError(f"determinant of non-square {self.shape}")
        if self.rows == 0:
            return 1
        return int(self.to_sympy().det())

    def rank(self) -> int:
        """Rank over the rationals."""
        if self.rows == 0 or self.cols == 0:
            return 0
        return int(self.to_sympy().rank())

    def is_unimodular(self) -> bool:
        return self.is_square() and abs(self.determinant()) == 1

    def inverse(self) -> "IntMatrix":
        """Integer inverse of a unimodular matrix."""
        if not self.is_unimodular():
            raise ValueError(f"matrix with determinant {self.determinant() if self.is_square() else '-'} "
                             "has no integer inverse")
        if self.rows == 0:
            return self
        return IntMatrix.from_sympy(self.to_sympy().inv())

    def __str__(self) -> str:
        if self.rows == 0:
            return f"[] ({self.rows}x{self.cols})"
        width = max(len(str(x)) for x in self.entries) if self.entries else 1
        lines = []
        for i in range(self.rows):
            lines.append("[" + " ".join(str(x).rjust(width) for x in self.row(i)) + "]")
        return "\n".join(lines)


def column_vectors(vectors: Iterable[Sequence[int]], rows: int) -> IntMatrix:
    """Matrix whose columns are the given vectors."""
    return IntMatrix.from_columns([tuple(v) for v in vectors], rows)
