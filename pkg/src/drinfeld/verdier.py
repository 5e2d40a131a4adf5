"""
DGKIT VERDIER COMPARISON

Compares H^0 of Drinfeld quotient homs with hom dimensions known from an
independent description of the Verdier quotient.
"""

from __future__ import annotations

import logging
from typing import Iterable, Mapping, Optional

from src.contracts.errors import TrustWindowError
from src.contracts.interfaces import IDGCategory
from src.contracts.schemas import ComparisonReport, PairComparison
from src.drinfeld.quotient import QuotientCategory, drinfeld_quotient, h0_hom

logger = logging.getLogger(__name__)


def compare_h0(q: QuotientCategory, expected: Mapping[tuple[str, str], int]) -> ComparisonReport:
    """H^0 dimensions of an already materialized quotient against expectations."""
    pairs = []
    for (a, b), want in expected.items():
        try:
            dim, _ = h0_hom(q, a, b)
            pairs.append(PairComparison(source=a, target=b, expected=want, computed=dim))
        except TrustWindowError as e:
            logger.warning(f"({a}, {b}) skipped: {e}")
            pairs.append(PairComparison(source=a, target=b, expected=want, trusted=False))
    report = ComparisonReport(depth=q.depth, contracted=list(q.contracted), pairs=pairs)
    logger.info(f"verdier comparison: {sum(p.matches for p in pairs)}/{len(pairs)} pairs match")
    return report


def verdier_hom_check(a_cat: IDGCategory, contracted: Iterable[str],
                      pairs: Mapping[tuple[str, str], int],
                      depth: Optional[int] = None) -> ComparisonReport:
    """
    Materialize A/I and compare H^0 of each requested hom with its expected
    dimension. Pairs outside the trust window are reported as untrusted and
    never count as matching.
    """
    return compare_h0(drinfeld_quotient(a_cat, contracted, depth), pairs)
