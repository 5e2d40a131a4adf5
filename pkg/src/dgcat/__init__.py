"""
DGKIT DGCAT — Finite DG categories, functors and quiver presentations.
"""

from src.dgcat.complex import Complex
from src.dgcat.category import BasisElement, DGCategory
from src.dgcat.validation import validate
from src.dgcat.functor import DGFunctor, full_subcategory, opposite, relabel_objects
from src.dgcat.quiver import Arrow, QuiverPresentation, from_quiver, path_count, is_acyclic_quiver
from src.dgcat.random_gen import random_quiver, random_category

__all__ = [
    "Complex",
    "BasisElement",
    "DGCategory",
    "validate",
    "DGFunctor",
    "full_subcategory",
    "opposite",
    "relabel_objects",
    "Arrow",
    "QuiverPresentation",
    "from_quiver",
    "path_count",
    "is_acyclic_quiver",
    "random_quiver",
    "random_category",
]
