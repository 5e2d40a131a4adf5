"""
DGKIT PERFECTNESS SEARCH

Bounded search for a twisted-complex resolution of a module, and the
levelwise quasi-isomorphism test.

The search keeps a twisted complex X and a closed degree-0 map φ: X → M.
At every object b the cone of φ_*: Hom(h_b, X) → M_b is

    M_b ⊕ Hom(h_b, X)[1],   D(m, u) = (dm + φ_*(u), -du)

While some cone has cohomology, a class (m, u) in the highest nonvanishing
degree k is killed by appending the entry (b, -k) with twist column -u and
φ-component m. Finding nothing within max_len steps is not a proof that M
is not perfect.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from src.config import get_settings
from src.contracts.schemas import PerfectnessStatus
from src.dgcat.complex import Complex
from src.dgcat.functor import full_subcategory
from src.lattice.field import SparseVector, add_scaled
from src.perfect.homs import HomLayout, cohomology, hom_complex, is_acyclic
from src.perfect.module import Module, hom_to_module, representable_module
from src.perfect.transport import restrict_module
from src.perfect.twisted import PerfMorphism, TwistedComplex, cone

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PerfectnessResult:
    """Witness or give-up. comparison[i] ∈ M_{a_i} is the map X → M."""
    status: PerfectnessStatus
    steps: int
    witness: Optional[TwistedComplex] = None
    comparison: dict = field(default_factory=dict)
    verified: bool = False

    @property
    def perfect(self) -> bool:
        return self.status == PerfectnessStatus.PERFECT


def _cone_at(m: Module, x: TwistedComplex, phi: dict[int, SparseVector],
             b: str) -> tuple[Complex, int, HomLayout]:
    """Cone complex of φ_* at object b, with the split point and the U layout."""
    c = m.category
    k = c.field
    v_part = m.fiber(b)
    rep = TwistedComplex.representable(c, b)
    layout = HomLayout.of(rep, x)
    u_part = hom_complex(rep, x)
    nv = v_part.total_dimension
    degrees = list(v_part.degrees) + [d - 1 for d in u_part.degrees]
    columns: dict[int, SparseVector] = {}
    for s in range(nv):
        col = v_part.d({s: k.one})
        if col:
            columns[s] = col
    for col_index, (j, _, t) in enumerate(layout.cells):
        column: SparseVector = {}
        xj = x.entries[j][0]
        if j in phi:
            column.update(m.act(b, xj, phi[j], {t: k.one}))
        for u, value in u_part.d({col_index: k.one}).items():
            column[nv + u] = -value
        if column:
            columns[nv + col_index] = column
    return Complex.from_sparse(k, degrees, columns), nv, layout


def _top_class(m: Module, x: TwistedComplex, phi: dict[int, SparseVector]):
    """(object, degree, cocycle, split, layout) for the highest cone class, or None."""
    best = None
    for b in m.category.objects:
        cplx, nv, layout = _cone_at(m, x, phi, b)
        for n in reversed(cplx.occupied_degrees()):
            dim, reps = cohomology(cplx, n)
            if dim:
                if best is None or n > best[1]:
                    best = (b, n, reps[0], nv, layout)
                break
    return best


def bounded_perfectness_search(m: Module, max_len: Optional[int] = None) -> PerfectnessResult:
    """
    Look for a twisted complex X with a quasi-isomorphism X → M.

    Returns PERFECT with the witness after at most max_len entries, otherwise
    NOT_FOUND_WITHIN_BOUND.
    """
    max_len = get_settings().search_max_length if max_len is None else max_len
    c = m.category
    k = c.field
    x = TwistedComplex.zero(c)
    phi: dict[int, SparseVector] = {}

    for step in range(max_len + 1):
        found = _top_class(m, x, phi)
        if found is None:
            verified = _verify(m, x, phi)
            logger.info(f"perfectness witness of length {len(x)}: {x}")
            return PerfectnessResult(PerfectnessStatus.PERFECT, step, x, dict(phi), verified)
        if len(x) == max_len:
            break
        b, degree, cocycle, nv, layout = found
        mpart = {s: v for s, v in cocycle.items() if s < nv}
        upart = {s - nv: v for s, v in cocycle.items() if s >= nv}
        new = len(x)
        twist = dict(x.twist)
        for (j, _, t), v in ((layout.cells[u], v) for u, v in upart.items()):
            add_scaled(twist.setdefault((j, new), {}), {t: -v}, k.one)
        x = TwistedComplex(c, x.entries + ((b, -degree),), twist)
        if mpart:
            phi[new] = mpart
        logger.debug(f"search step {step}: killed a degree-{degree} class at {b}")

    logger.info(f"no perfectness witness within {max_len} entries")
    return PerfectnessResult(PerfectnessStatus.NOT_FOUND_WITHIN_BOUND, max_len)


def _verify(m: Module, x: TwistedComplex, phi: dict[int, SparseVector]) -> bool:
    """Maurer–Cartan for X, φ closed of degree 0, and every cone acyclic."""
    if not x.is_maurer_cartan():
        return False
    total = hom_to_module(x, m)
    vec: SparseVector = {}
    offset = 0
    for i, (a, _) in enumerate(x.entries):
        for s, v in phi.get(i, {}).items():
            vec[offset + s] = v
        offset += m.fiber(a).total_dimension
    if total.d(vec):
        return False
    return all(is_acyclic(_cone_at(m, x, phi, b)[0]) for b in m.category.objects)


# ═══════════════════════════════════════════════════════════════════════════
# QUASI-ISOMORPHISMS
# ═══════════════════════════════════════════════════════════════════════════

def is_quasi_iso(f: PerfMorphism) -> bool:
    """True iff Hom(h_a, cone(f)) is acyclic for every object a."""
    cn = cone(f)
    c = cn.category
    return all(
        is_acyclic(hom_complex(TwistedComplex.representable(c, a), cn)) for a in c.objects
    )


def perfectness_witness_for_inclusion(a, objects, max_len: Optional[int] = None
                                      ) -> dict[str, PerfectnessResult]:
    """
    Search a resolution of each restricted representable h_b|_I.

    When every result is PERFECT the quotient functor A → A/I preserves
    compact objects.
    """
    sub, inclusion = full_subcategory(a, objects)
    results = {}
    for b in a.objects:
        restricted = restrict_module(inclusion, representable_module(a, b))
        results[b] = bounded_perfectness_search(restricted, max_len)
        logger.debug(f"h_{b} restricted to I: {results[b].status.value}")
    return results
