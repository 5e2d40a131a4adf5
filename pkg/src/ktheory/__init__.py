"""
DGKIT KTHEORY — Euler lattices, numerical Grothendieck groups and the sequence verifier.
"""

from src.ktheory.euler_lattice import (
    EulerLattice,
    ChiKernels,
    gram_from_category,
    serre_from_gram,
    chi_kernels,
    numerical_group,
    induced_numerical_map,
)
from src.ktheory.verifier import (
    KTriple,
    check_kermaps,
    verify_numerical_sequence,
    verify_k0_sequence,
)

__all__ = [
    "EulerLattice",
    "ChiKernels",
    "gram_from_category",
    "serre_from_gram",
    "chi_kernels",
    "numerical_group",
    "induced_numerical_map",
    "KTriple",
    "check_kermaps",
    "verify_numerical_sequence",
    "verify_k0_sequence",
]
