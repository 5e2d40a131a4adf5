"""
DGKIT EULER LATTICES

K_0 of a category presented by a declared free generating family, with the
Euler pairing χ(a, b) = χ(Hom(a, b)) as a Gram matrix. The first argument
of χ is the source of the hom.

With a Serre functor S on K_0 the pairing satisfies χ(a, b) = χ(b, Sa), that
is Gᵀ = G·S. Numerical groups are K_0 modulo the kernel of χ.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from src.contracts.errors import (
    KernelMismatchError,
    SerreError,
    ShapeMismatchError,
    UnknownObjectError,
)
from src.contracts.interfaces import IDGCategory
from src.contracts.schemas import Provenance
from src.lattice.intmatrix import IntMatrix
from src.lattice.presentation import AbGroupPresentation, quotient_presentation
from src.lattice.sublattice import Sublattice, integer_kernel
from src.perfect.homs import chi
from src.perfect.twisted import TwistedComplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EulerLattice:
    """
    Free K_0 of rank n with its Euler pairing.

    Raises:
        ShapeMismatchError: gram or serre is not n×n
        SerreError: serre is given but Gᵀ != G·S or S is not invertible over Z
    """
    rank: int
    gram: IntMatrix
    serre: Optional[IntMatrix] = None
    provenance: Provenance = Provenance.SUPPLIED

    def __post_init__(self):
        if self.gram.shape != (self.rank, self.rank):
            raise ShapeMismatchError(f"gram has shape {self.gram.shape}, expected {self.rank}x{self.rank}")
        if self.serre is not None:
            if self.serre.shape != (self.rank, self.rank):
                raise ShapeMismatchError(f"serre has shape {self.serre.shape}")
            if not self.serre.is_unimodular():
                raise SerreError("serre matrix is not invertible over Z")
            if self.gram.T != self.gram @ self.serre:
                raise SerreError("serre matrix does not satisfy Gᵀ = G·S")

    @classmethod
    def from_rows(cls, gram: Sequence[Sequence[int]], serre: Optional[Sequence[Sequence[int]]] = None,
                  provenance: Provenance = Provenance.SUPPLIED) -> "EulerLattice":
        n = len(gram)
        return cls(
            n,
            IntMatrix.from_rows(gram, cols=n),
            IntMatrix.from_rows(serre, cols=n) if serre is not None else None,
            provenance,
        )

    def with_serre(self, serre: IntMatrix) -> "EulerLattice":
        return EulerLattice(self.rank, self.gram, serre, self.provenance)


class ChiKernels(NamedTuple):
    left: Sublattice
    right: Sublattice
    agree: bool


# ═══════════════════════════════════════════════════════════════════════════
# OPERATIONS
# ═══════════════════════════════════════════════════════════════════════════

def gram_from_category(a_cat: IDGCategory, gens: Sequence[TwistedComplex]) -> EulerLattice:
    """
    G[i][j] = χ(Hom(gens[i], gens[j])). An empty family gives the rank-0 lattice.

    Raises:
        UnknownObjectError: a generator is a twisted complex over another category
    """
    foreign = [str(x) for x in gens if x.category is not a_cat and x.category != a_cat]
    if foreign:
        raise UnknownObjectError(f"generators {foreign} do not live in {a_cat!r}")
    n = len(gens)
    rows = [[chi(x, y) for y in gens] for x in gens]
    logger.debug(f"gram from {n} generators: {rows}")
    return EulerLattice(n, IntMatrix.from_rows(rows, cols=n), provenance=Provenance.COMPUTED)


def serre_from_gram(lattice: EulerLattice) -> IntMatrix:
    """
    S = G⁻¹Gᵀ, the unique solution of Gᵀ = G·S.

    Raises:
        SerreError: G is not unimodular; supply S instead
    """
    g = lattice.gram
    if not g.is_unimodular():
        raise SerreError(f"gram matrix has determinant {g.determinant()}; supply the Serre matrix")
    return g.inverse() @ g.T


def chi_kernels(lattice: EulerLattice) -> ChiKernels:
    """Left kernel {v : vᵀG = 0} and right kernel {v : Gv = 0}."""
    left = integer_kernel(lattice.gram.T)
    right = integer_kernel(lattice.gram)
    agree = left == right
    if lattice.serre is not None and not agree:
        # Gᵀ = G·S with S invertible forces equal kernels
        raise SerreError("kernels of χ disagree although a Serre matrix was accepted")
    return ChiKernels(left, right, agree)


def _disagreement(kernels: ChiKernels) -> Optional[list[int]]:
    for v in kernels.left.vectors():
        if not kernels.right.contains(v):
            return list(v)
    for v in kernels.right.vectors():
        if not kernels.left.contains(v):
            return list(v)
    return None


def numerical_group(lattice: EulerLattice) -> AbGroupPresentation:
    """
    N = K_0 / Ker(χ); always free.

    Raises:
        KernelMismatchError: left and right kernels of χ differ
    """
    kernels = chi_kernels(lattice)
    if not kernels.agree:
        witness = _disagreement(kernels)
        raise KernelMismatchError(
            f"left kernel {kernels.left} and right kernel {kernels.right} of χ differ", witness,
        )
    return quotient_presentation(lattice.rank, kernels.right)


def induced_numerical_map(f: IntMatrix, src: EulerLattice, dst: EulerLattice) -> IntMatrix:
    """
    The map N(src) → N(dst) induced by f: K_0(src) → K_0(dst), in the bases
    given by the free parts of the numerical groups.

    Raises:
        ShapeMismatchError: f is not dst.rank × src.rank
        KernelMismatchError: f sends a kernel vector of χ_src outside Ker(χ_dst)
    """
    if f.shape != (dst.rank, src.rank):
        raise ShapeMismatchError(f"map of shape {f.shape} between ranks {src.rank} and {dst.rank}")
    n_src, n_dst = numerical_group(src), numerical_group(dst)
    ker_dst = chi_kernels(dst).right
    for v in chi_kernels(src).right.vectors():
        if not ker_dst.contains(f.apply(v)):
            raise KernelMismatchError(
                f"{list(v)} lies in Ker(χ) but its image {list(f.apply(v))} does not", list(v),
            )
    induced = n_dst.free_projection() @ f @ n_src.free_section()
    logger.debug(f"induced numerical map: {induced.to_rows()}")
    return induced
