"""
DGKIT EXACTNESS CHECKS

Exactness of Z^a --f--> Z^b --g--> Z^c / R at the middle term, decided by
literal comparison of Hermite-normalized lattices.
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence

from src.contracts.errors import ShapeMismatchError
from src.contracts.schemas import ExactnessReport
from src.lattice.intmatrix import IntMatrix
from src.lattice.presentation import quotient_presentation
from src.lattice.sublattice import (
    Sublattice,
    image_lattice,
    lattice_index,
    lattice_sum,
    preimage,
)

logger = logging.getLogger(__name__)


def check_exact_at(
    f: IntMatrix,
    g: IntMatrix,
    target_relations: Optional[Sublattice] = None,
    expected_cokernel: Optional[Sequence[int]] = None,
) -> ExactnessReport:
    """
    Check exactness of f then g.

    Args:
        f: b×a matrix of the first map
        g: c×b matrix of the second map
        target_relations: relation lattice R of the target, so g lands in
            Z^c / R. Defaults to 0 (free target).
        expected_cokernel: invariant factors expected for coker(f)

    Returns:
        ExactnessReport. Ker(g) means {v : g·v ∈ R}. When Im(f) ⊊ Ker(g) the
        report names a kernel basis vector outside the image.
    """
    if f.rows != g.cols:
        raise ShapeMismatchError(f"cannot follow a {f.shape} map by a {g.shape} map")
    relations = target_relations if target_relations is not None else Sublattice.zero(g.rows)
    if relations.ambient_rank != g.rows:
        raise ShapeMismatchError(
            f"target relations of rank {relations.ambient_rank} for a target of rank {g.rows}"
        )

    composite = g @ f
    composite_zero = all(relations.contains(c) for c in composite.columns())

    image = image_lattice(f)
    kernel = preimage(g, relations)
    equal = image == kernel

    index = lattice_index(image, kernel)
    witness = None
    if not equal:
        witness = next((list(v) for v in kernel.vectors() if not image.contains(v)), None)

    surjective = lattice_sum(image_lattice(g), relations).is_full()
    coker = quotient_presentation(f.rows, image)

    report = ExactnessReport(
        composite_zero=composite_zero,
        image_equals_kernel=equal,
        image_finite_index=index is not None,
        index=index,
        surjective=surjective,
        image_basis=[list(v) for v in image.vectors()],
        kernel_basis=[list(v) for v in kernel.vectors()],
        witness=witness,
        cokernel_factors=list(coker.normalized()),
        expected_cokernel_factors=list(expected_cokernel) if expected_cokernel is not None else None,
    )
    logger.info(
        f"exactness: composite_zero={composite_zero} image=kernel={equal} "
        f"index={index} surjective={surjective}"
    )
    return report
