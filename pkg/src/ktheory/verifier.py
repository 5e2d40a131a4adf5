"""
DGKIT SEQUENCE VERIFIER

Machine check of the sequence K_0(I) → K_0(A) → K_0(A/I) → 0 and of its
numerical descent N(I) → N(A) → N(A/I) → 0, together with the kernel
compatibilities the descent rests on.

Every claim is reported with whether a theorem backs it under the recorded
hypotheses. Only theorem-backed claims that fail count as failures.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from src.contracts.errors import ShapeMismatchError
from src.contracts.schemas import (
    ExactnessReport,
    HypothesisSource,
    Hypotheses,
    KermapsReport,
    SequenceReport,
    Verdict,
)
from src.ktheory.euler_lattice import (
    EulerLattice,
    chi_kernels,
    induced_numerical_map,
    numerical_group,
)
from src.lattice.exactness import check_exact_at
from src.lattice.intmatrix import IntMatrix
from src.lattice.presentation import AbGroupPresentation, is_torsion_free, quotient_presentation
from src.lattice.sublattice import (
    Sublattice,
    image_lattice,
    intersect,
    lattice_sum,
    map_lattice,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KTriple:
    """
    Lattices of I, A and Q = A/I with i*: K_0(I) → K_0(A) and q*: K_0(A) → K_0(Q).

    quotient_relations is the relation lattice R of K_0(Q) inside Z^{rank Q},
    zero unless K_0(Q) has torsion that the generators do not see.
    """
    lattice_i: EulerLattice
    lattice_a: EulerLattice
    lattice_q: EulerLattice
    i_star: IntMatrix
    q_star: IntMatrix
    quotient_relations: Optional[Sublattice] = None
    thick: HypothesisSource = HypothesisSource.ABSENT
    q_preserves_compacts: HypothesisSource = HypothesisSource.ABSENT
    witnesses: dict = field(default_factory=dict)

    def __post_init__(self):
        n_i, n_a, n_q = self.lattice_i.rank, self.lattice_a.rank, self.lattice_q.rank
        if self.i_star.shape != (n_a, n_i):
            raise ShapeMismatchError(f"i* has shape {self.i_star.shape}, expected {n_a}x{n_i}")
        if self.q_star.shape != (n_q, n_a):
            raise ShapeMismatchError(f"q* has shape {self.q_star.shape}, expected {n_q}x{n_a}")
        if self.quotient_relations is None:
            object.__setattr__(self, "quotient_relations", Sublattice.zero(n_q))
        elif self.quotient_relations.ambient_rank != n_q:
            raise ShapeMismatchError(
                f"quotient relations live in rank {self.quotient_relations.ambient_rank}, expected {n_q}"
            )

    def cokernel_of_i(self) -> AbGroupPresentation:
        return quotient_presentation(self.lattice_a.rank, image_lattice(self.i_star))

    def hypotheses(self) -> Hypotheses:
        return Hypotheses(
            thick=self.thick,
            q_preserves_compacts=self.q_preserves_compacts,
            cokernel_torsion_free=is_torsion_free(self.cokernel_of_i()),
        )


def _outside(s: Sublattice, t: Sublattice) -> list[list[int]]:
    """Basis vectors of s that t misses."""
    return [list(v) for v in s.vectors() if not t.contains(v)]


# ═══════════════════════════════════════════════════════════════════════════
# KERNEL COMPATIBILITY
# ═══════════════════════════════════════════════════════════════════════════

def check_kermaps(t: KTriple) -> KermapsReport:
    """
    (1) i*(K_0(I)) ∩ Ker χ_A = i*(Ker χ_I)
    (2) q*(Ker χ_A) ⊆ Ker χ_Q
    (3) q*(Ker χ_A) = Ker χ_Q, theorem-backed when q preserves compact
        objects or K_0(Q) is torsion-free
    """
    ker_i = chi_kernels(t.lattice_i).right
    ker_a = chi_kernels(t.lattice_a).right
    ker_q = chi_kernels(t.lattice_q).right
    relations = t.quotient_relations

    lhs = intersect(image_lattice(t.i_star), ker_a)
    rhs = map_lattice(t.i_star, ker_i)
    intersection = Verdict(
        name="i*(K0(I)) ∩ Ker χ_A = i*(Ker χ_I)",
        holds=lhs == rhs,
        theorem_backed=True,
        detail=f"left {lhs}, right {rhs}",
        witnesses=_outside(lhs, rhs) + _outside(rhs, lhs),
    )

    pushed = lattice_sum(map_lattice(t.q_star, ker_a), relations)
    target = lattice_sum(ker_q, relations)
    maps_kernel = Verdict(
        name="q*(Ker χ_A) ⊆ Ker χ_Q",
        holds=target.contains_lattice(pushed),
        theorem_backed=True,
        detail=f"q*(Ker χ_A) = {pushed}, Ker χ_Q = {target}",
        witnesses=_outside(pushed, target),
    )

    backed = (
        t.q_preserves_compacts != HypothesisSource.ABSENT
        or is_torsion_free(t.cokernel_of_i())
    )
    onto = pushed.contains_lattice(target)
    if onto:
        detail = "equality holds"
    elif backed:
        detail = "equality fails"
    else:
        detail = "equality fails; consistent with the hypotheses, which do not force it"
    onto_kernel = Verdict(
        name="q*(Ker χ_A) = Ker χ_Q",
        holds=onto and maps_kernel.holds,
        theorem_backed=backed,
        detail=detail,
        witnesses=_outside(target, pushed),
    )

    report = KermapsReport(intersection=intersection, q_maps_kernel=maps_kernel, q_onto_kernel=onto_kernel)
    logger.info(f"kermaps: {[v.holds for v in report.verdicts]}, passed={report.passed}")
    return report


# ═══════════════════════════════════════════════════════════════════════════
# EXACT SEQUENCES
# ═══════════════════════════════════════════════════════════════════════════

def verify_numerical_sequence(t: KTriple) -> SequenceReport:
    """
    Induced maps on numerical groups, exactness at N(A), surjectivity onto
    N(Q), and the cross-check K_0(A) / (i*(K_0(I)) + Ker χ_A) ≅ N(Q).

    The report is computed whatever the hypotheses; its route says which
    result, if any, backs the conclusion.

    Raises:
        KernelMismatchError: χ has different left and right kernels, or a
            map does not send kernel into kernel
    """
    hypotheses = t.hypotheses()
    n_i = numerical_group(t.lattice_i)
    n_a = numerical_group(t.lattice_a)
    n_q = numerical_group(t.lattice_q)

    induced_i = induced_numerical_map(t.i_star, t.lattice_i, t.lattice_a)
    induced_q = induced_numerical_map(t.q_star, t.lattice_a, t.lattice_q)
    exactness = check_exact_at(induced_i, induced_q)

    ker_a = chi_kernels(t.lattice_a).right
    chain = quotient_presentation(t.lattice_a.rank, lattice_sum(image_lattice(t.i_star), ker_a))

    report = SequenceReport(
        hypotheses=hypotheses,
        route=hypotheses.route,
        ranks=[n_i.free_rank, n_a.free_rank, n_q.free_rank],
        induced_i=induced_i.to_rows(),
        induced_q=induced_q.to_rows(),
        exactness=exactness,
        cross_check_factors=list(chain.normalized()),
        quotient_factors=list(n_q.normalized()),
        kermaps=check_kermaps(t),
    )
    logger.info(
        f"numerical sequence: route={report.route.value} exact={exactness.exact} "
        f"surjective={exactness.surjective} passed={report.passed}"
    )
    return report


def verify_k0_sequence(t: KTriple, expected_coker: Optional[AbGroupPresentation] = None) -> ExactnessReport:
    """K_0(I) → K_0(A) → K_0(Q) → 0 with K_0(Q) = Z^{rank Q} / R."""
    expected = list(expected_coker.normalized()) if expected_coker is not None else None
    return check_exact_at(t.i_star, t.q_star, t.quotient_relations, expected)
