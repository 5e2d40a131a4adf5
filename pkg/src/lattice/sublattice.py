"""
DGKIT SUBLATTICES

Sublattices of Z^n stored in column Hermite normal form, so that equality of
sublattices is equality of data.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from src.contracts.errors import RankMismatchError, ShapeMismatchError
from src.lattice.intmatrix import IntMatrix
from src.lattice.normal_forms import hermite_rows, smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Sublattice:
    """
    A sublattice of Z^ambient_rank.

    The columns of basis are a Z-basis in Hermite normal form: read as rows
    they are echelon with positive pivots and reduced entries above them.
    Build through from_generators so the normalization always holds.
    """
    ambient_rank: int
    basis: IntMatrix

    def __post_init__(self):
        if self.basis.rows != self.ambient_rank:
            raise RankMismatchError(
                f"basis has {self.basis.rows} rows, ambient rank is {self.ambient_rank}"
            )

    @classmethod
    def from_generators(cls, ambient_rank: int, vectors: Iterable[Sequence[int]]) -> "Sublattice":
        vectors = [tuple(int(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_rank:
                raise RankMismatchError(f"vector of length {len(v)} in ambient rank {ambient_rank}")
        rows = hermite_rows(vectors, ambient_rank)
        return cls(ambient_rank, IntMatrix.from_columns(rows, ambient_rank))

    @classmethod
    def zero(cls, ambient_rank: int) -> "Sublattice":
        return cls(ambient_rank, IntMatrix.zeros(ambient_rank, 0))

    @classmethod
    def full(cls, ambient_rank: int) -> "Sublattice":
        return cls(ambient_rank, IntMatrix.identity(ambient_rank))

    @property
    def rank(self) -> int:
        return self.basis.cols

    def vectors(self) -> list[tuple[int, ...]]:
        return self.basis.columns()

    def is_zero(self) -> bool:
        return self.rank == 0

    def is_full(self) -> bool:
        return self == Sublattice.full(self.ambient_rank)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_rank:
            raise RankMismatchError(f"vector of length {len(v)} in ambient rank {self.ambient_rank}")
        return lattice_sum(self, Sublattice.from_generators(self.ambient_rank, [v])) == self

    def contains_lattice(self, other: "Sublattice") -> bool:
        _check_same_rank(self, other)
        return lattice_sum(self, other) == self

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return "span{" + ", ".join("(" + ",".join(map(str, v)) + ")" for v in self.vectors()) + "}"


def _check_same_rank(s1: Sublattice, s2: Sublattice) -> None:
    if s1.ambient_rank != s2.ambient_rank:
        raise RankMismatchError(
            f"ambient ranks differ: {s1.ambient_rank} vs {s2.ambient_rank}"
        )


# ═══════════════════════════════════════════════════════════════════════════
# LATTICE OPERATIONS
# ═══════════════════════════════════════════════════════════════════════════

def integer_kernel(m: IntMatrix) -> Sublattice:
    """
    Z-basis of {v : M·v = 0}.

    Read off the Smith transform: with D = U·M·V, the columns of V beyond the
    rank of D span the kernel. The result is saturated in Z^cols.
    """
    _, d, v = smith_normal_form(m)
    r = sum(1 for i in range(min(d.rows, d.cols)) if d[i, i] != 0)
    return Sublattice.from_generators(m.cols, [v.column(j) for j in range(r, m.cols)])


def image_lattice(m: IntMatrix) -> Sublattice:
    """Column span of M over Z."""
    return Sublattice.from_generators(m.rows, m.columns())


def lattice_sum(s1: Sublattice, s2: Sublattice) -> Sublattice:
    _check_same_rank(s1, s2)
    return Sublattice.from_generators(s1.ambient_rank, s1.vectors() + s2.vectors())


def intersect(s1: Sublattice, s2: Sublattice) -> Sublattice:
    """S1 ∩ S2 through the kernel of the stacked basis [B1 | -B2]."""
    _check_same_rank(s1, s2)
    n = s1.ambient_rank
    if s1.is_zero() or s2.is_zero():
        return Sublattice.zero(n)
    stacked = s1.basis.hstack(-s2.basis)
    kernel = integer_kernel(stacked)
    k1 = s1.rank
    vectors = [s1.basis.apply(c[:k1]) for c in kernel.vectors()]
    return Sublattice.from_generators(n, vectors)


def preimage(m: IntMatrix, target: Optional[Sublattice] = None) -> Sublattice:
    """{v : M·v ∈ target}; target defaults to the zero lattice."""
    if target is None or target.is_zero():
        return integer_kernel(m)
    if target.ambient_rank != m.rows:
        raise ShapeMismatchError(f"target rank {target.ambient_rank} for {m.rows} rows")
    stacked = m.hstack(-target.basis)
    kernel = integer_kernel(stacked)
    return Sublattice.from_generators(m.cols, [c[:m.cols] for c in kernel.vectors()])


def map_lattice(m: IntMatrix, s: Sublattice) -> Sublattice:
    """Image M(S)."""
    if s.ambient_rank != m.cols:
        raise ShapeMismatchError(f"lattice of rank {s.ambient_rank} for {m.cols} columns")
    return Sublattice.from_generators(m.rows, [m.apply(v) for v in s.vectors()])


def lattice_index(sub: Sublattice, sup: Sublattice) -> Optional[int]:
    """
    Index [sup : sub] when sub ⊆ sup have equal rank, else None.

    Uses det(BᵀB) of both bases: their ratio is the square of the index.
    """
    _check_same_rank(sub, sup)
    if sub.rank != sup.rank or not sup.contains_lattice(sub):
        return None
    if sub.rank == 0:
        return 1
    g_sub = (sub.basis.T @ sub.basis).determinant()
    g_sup = (sup.basis.T @ sup.basis).determinant()
    ratio = g_sub // g_sup
    root = math.isqrt(ratio)
    if root * root != ratio or ratio * g_sup != g_sub:
        raise ArithmeticError(f"Gram determinants {g_sub}, {g_sup} do not give a square index")
    return root


def is_saturated(s: Sublattice) -> bool:
    """True when Z^n / S is torsion-free."""
    _, d, _ = smith_normal_form(s.basis)
    return all(d[i, i] in (0, 1) for i in range(min(d.rows, d.cols)))
