"""
DGKIT LATTICE — Exact integer and field linear algebra.
"""

from src.lattice.intmatrix import IntMatrix, column_vectors
from src.lattice.field import (
    CoefficientField,
    FieldMatrix,
    SparseVector,
    add_scaled,
    scaled,
    dense,
    sparse,
    independent_subset,
)
from src.lattice.normal_forms import smith_normal_form, invariant_factors, hermite_rows
from src.lattice.sublattice import (
    Sublattice,
    integer_kernel,
    image_lattice,
    intersect,
    lattice_sum,
    preimage,
    map_lattice,
    lattice_index,
    is_saturated,
)
from src.lattice.presentation import (
    AbGroupPresentation,
    quotient_presentation,
    presentation_from_factors,
    is_torsion_free,
)
from src.lattice.exactness import check_exact_at

__all__ = [
    "IntMatrix",
    "column_vectors",
    "CoefficientField",
    "FieldMatrix",
    "SparseVector",
    "add_scaled",
    "scaled",
    "dense",
    "sparse",
    "independent_subset",
    "smith_normal_form",
    "invariant_factors",
    "hermite_rows",
    "Sublattice",
    "integer_kernel",
    "image_lattice",
    "intersect",
    "lattice_sum",
    "preimage",
    "map_lattice",
    "lattice_index",
    "is_saturated",
    "AbGroupPresentation",
    "quotient_presentation",
    "presentation_from_factors",
    "is_torsion_free",
    "check_exact_at",
]
