"""
DGKIT DRINFELD — Truncated Drinfeld quotients and the H^0 comparison with Verdier quotients.
"""

from src.drinfeld.quotient import (
    TrustWindow,
    QuotientCategory,
    compute_trust_window,
    drinfeld_quotient,
    h0_hom,
    quotient_functor,
    gram_from_quotient,
)
from src.drinfeld.verdier import compare_h0, verdier_hom_check

__all__ = [
    "TrustWindow",
    "QuotientCategory",
    "compute_trust_window",
    "drinfeld_quotient",
    "h0_hom",
    "quotient_functor",
    "gram_from_quotient",
    "compare_h0",
    "verdier_hom_check",
]
