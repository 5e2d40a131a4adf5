"""
DGKIT ABELIAN GROUP PRESENTATIONS

Finitely generated abelian groups Z^n / R, normalized through the Smith form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from src.contracts.errors import RankMismatchError
from src.lattice.intmatrix import IntMatrix
from src.lattice.normal_forms import smith_normal_form
from src.lattice.sublattice import Sublattice

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbGroupPresentation:
    """
    Z^generator_count modulo the column span of relation_matrix.

    invariant_factors has one entry per generator: with D = U·R·V the group
    is ⊕ Z/d_i, where d_i = 0 marks a free summand and d_i = 1 a trivial one.
    coordinates is U, the change of generators realizing that splitting.
    """
    generator_count: int
    relation_matrix: IntMatrix
    invariant_factors: tuple[int, ...]
    coordinates: IntMatrix

    @classmethod
    def from_relations(cls, generator_count: int, relations: IntMatrix) -> "AbGroupPresentation":
        if relations.rows != generator_count:
            raise RankMismatchError(
                f"relations have {relations.rows} rows for {generator_count} generators"
            )
        u, d, _ = smith_normal_form(relations)
        factors = [d[i, i] if i < d.cols else 0 for i in range(generator_count)]
        return cls(generator_count, relations, tuple(factors), u)

    @classmethod
    def free(cls, rank: int) -> "AbGroupPresentation":
        return cls.from_relations(rank, IntMatrix.zeros(rank, 0))

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d == 0)

    @property
    def torsion(self) -> list[int]:
        return [d for d in self.invariant_factors if d > 1]

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def normalized(self) -> tuple[int, ...]:
        """Invariant factors with trivial summands dropped, torsion first."""
        return tuple(self.torsion) + (0,) * self.free_rank

    def isomorphic(self, other: "AbGroupPresentation") -> bool:
        return self.normalized() == other.normalized()

    # ─── Free part ────────────────────────────────────────────────────────────

    def _free_indices(self) -> list[int]:
        return [i for i, d in enumerate(self.invariant_factors) if d == 0]

    def free_projection(self) -> IntMatrix:
        """Z^n → Z^free_rank, killing the relations and the torsion."""
        rows = [self.coordinates.row(i) for i in self._free_indices()]
        return IntMatrix.from_rows(rows, cols=self.generator_count)

    def free_section(self) -> IntMatrix:
        """Z^free_rank → Z^n with free_projection ∘ free_section = identity."""
        inverse = self.coordinates.inverse()
        return IntMatrix.from_columns(
            [inverse.column(i) for i in self._free_indices()], self.generator_count
        )

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.insert(0, "Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def presentation_from_factors(factors: Sequence[int]) -> AbGroupPresentation:
    """The group ⊕ Z/d for the given factors (0 for Z)."""
    n = len(factors)
    relations = [tuple(d if i == j else 0 for i in range(n)) for j, d in enumerate(factors) if d != 0]
    return AbGroupPresentation.from_relations(n, IntMatrix.from_columns(relations, n))


def quotient_presentation(ambient_rank: int, s: Sublattice) -> AbGroupPresentation:
    """Presentation of Z^ambient_rank / S."""
    if s.ambient_rank != ambient_rank:
        raise RankMismatchError(
            f"sublattice of rank {s.ambient_rank} in ambient rank {ambient_rank}"
        )
    p = AbGroupPresentation.from_relations(ambient_rank, s.basis)
    logger.debug(f"Z^{ambient_rank}/{s} = {p}")
    return p


def is_torsion_free(p: AbGroupPresentation) -> bool:
    return all(d in (0, 1) for d in p.invariant_factors)
