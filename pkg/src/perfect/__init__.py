"""
DGKIT PERFECT — Twisted complexes, DG modules and the perfectness search.
"""

from src.perfect.twisted import (
    TwistedComplex,
    PerfMorphism,
    identity_morphism,
    zero_morphism,
    compose_morphisms,
    shift,
    cone,
)
from src.perfect.homs import (
    HomLayout,
    hom_complex,
    total_differential,
    cohomology,
    cohomology_dimensions,
    is_acyclic,
    euler_char,
    euler_char_from_cohomology,
    chi,
)
from src.perfect.module import (
    Module,
    representable_module,
    zero_module,
    module_of,
    hom_to_module,
)
from src.perfect.transport import extend_scalars, extend_morphism, restrict_module
from src.perfect.search import (
    PerfectnessResult,
    bounded_perfectness_search,
    is_quasi_iso,
    perfectness_witness_for_inclusion,
)

__all__ = [
    "TwistedComplex",
    "PerfMorphism",
    "identity_morphism",
    "zero_morphism",
    "compose_morphisms",
    "shift",
    "cone",
    "HomLayout",
    "hom_complex",
    "total_differential",
    "cohomology",
    "cohomology_dimensions",
    "is_acyclic",
    "euler_char",
    "euler_char_from_cohomology",
    "chi",
    "Module",
    "representable_module",
    "zero_module",
    "module_of",
    "hom_to_module",
    "extend_scalars",
    "extend_morphism",
    "restrict_module",
    "PerfectnessResult",
    "bounded_perfectness_search",
    "is_quasi_iso",
    "perfectness_witness_for_inclusion",
]
