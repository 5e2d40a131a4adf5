"""
DGKIT HOM COMPLEXES

Total hom complexes between twisted complexes, cohomology with explicit
representatives, and Euler characteristics.

For φ: X → Y of total degree p, the differential is

    D(φ)_ji = (-1)^{m_j} dφ_ji + Σ_k β_jk ∘ φ_ki - (-1)^p Σ_k φ_jk ∘ α_ki

where α, β are the twists of X, Y and m_j the shifts of Y.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from src.dgcat.complex import Complex
from src.lattice.field import SparseVector, add_scaled, independent_subset
from src.perfect.twisted import PerfMorphism, TwistedComplex

logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════════════════════
# LAYOUT
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class HomLayout:
    """Flat basis of Hom(X, Y): one cell (j, i, t) per basis element t of Hom(a_i, b_j)."""
    cells: tuple[tuple[int, int, int], ...]
    degrees: tuple[int, ...]
    index: dict

    @classmethod
    def of(cls, x: TwistedComplex, y: TwistedComplex) -> "HomLayout":
        c = x.category
        cells, degrees = [], []
        for j, (b, m) in enumerate(y.entries):
            for i, (a, n) in enumerate(x.entries):
                for t, e in enumerate(c.basis(a, b)):
                    cells.append((j, i, t))
                    degrees.append(e.degree + n - m)
        return cls(tuple(cells), tuple(degrees), {cell: k for k, cell in enumerate(cells)})

    def to_vector(self, f: PerfMorphism) -> SparseVector:
        return {
            self.index[(j, i, t)]: v
            for (j, i), comp in f.components.items() for t, v in comp.items()
        }

    def to_components(self, vec: SparseVector) -> dict[tuple[int, int], SparseVector]:
        out: dict[tuple[int, int], SparseVector] = {}
        for k, v in vec.items():
            j, i, t = self.cells[k]
            out.setdefault((j, i), {})[t] = v
        return out


def _total_d_of_cell(x: TwistedComplex, y: TwistedComplex, j: int, i: int, t: int,
                     degree: int) -> dict[tuple[int, int], SparseVector]:
    """D applied to the basis morphism with the single component e_t at (j, i)."""
    c = x.category
    k = c.field
    one = k.one
    (a, _), (b, m) = x.entries[i], y.entries[j]
    e = {t: one}
    out: dict[tuple[int, int], SparseVector] = {}

    de = c.d(a, b, e)
    if de:
        add_scaled(out.setdefault((j, i), {}), de, k.sign(m))
    for jj in range(j):
        beta = y.alpha(jj, j)
        if beta:
            add_scaled(out.setdefault((jj, i), {}), c.compose(a, b, y.entries[jj][0], beta, e), one)
    minus = -k.sign(degree)
    for ii in range(i + 1, len(x)):
        alpha = x.alpha(i, ii)
        if alpha:
            add_scaled(out.setdefault((j, ii), {}), c.compose(x.entries[ii][0], a, b, e, alpha), minus)
    return out


def hom_complex(x: TwistedComplex, y: TwistedComplex) -> Complex:
    """
    The total complex Hom(X, Y).

    Raises:
        DegreeWindowError: the total degrees exceed the configured span
    """
    layout = HomLayout.of(x, y)
    c = x.category
    columns: dict[int, SparseVector] = {}
    for col, (j, i, t) in enumerate(layout.cells):
        image = _total_d_of_cell(x, y, j, i, t, layout.degrees[col])
        vec: SparseVector = {}
        for (jj, ii), comp in image.items():
            for tt, v in comp.items():
                vec[layout.index[(jj, ii, tt)]] = v
        if vec:
            columns[col] = vec
    names = [
        f"{c.basis(x.entries[i][0], y.entries[j][0])[t].name}@{j},{i}"
        for (j, i, t) in layout.cells
    ]
    result = Complex.from_sparse(c.field, layout.degrees, columns, names)
    logger.debug(f"Hom({x}, {y}): dimension {result.total_dimension}, window {result.window}")
    return result


def total_differential(f: PerfMorphism) -> PerfMorphism:
    """D(f) as a morphism of degree |f| + 1."""
    x, y = f.source, f.target
    k = x.category.field
    out: dict[tuple[int, int], SparseVector] = {}
    for (j, i), comp in f.components.items():
        for t, v in comp.items():
            for key, value in _total_d_of_cell(x, y, j, i, t, f.degree).items():
                add_scaled(out.setdefault(key, {}), value, v)
    return PerfMorphism(x, y, out, f.degree + 1)


# ═══════════════════════════════════════════════════════════════════════════
# COHOMOLOGY
# ═══════════════════════════════════════════════════════════════════════════

def cohomology(c: Complex, n: int) -> tuple[int, list[SparseVector]]:
    """
    H^n(C) with representative cocycles.

    Returns:
        (dimension, cocycles) where the cocycles are sparse vectors in the
        flat basis of C whose classes form a basis of H^n.
    """
    k = c.field
    here = c.indices(n)
    if not here:
        return 0, []
    cycles = c.component(n).kernel()
    boundaries = [c.component(n - 1).column(j) for j in range(c.dimension(n - 1))]
    chosen = independent_subset(k, boundaries + list(cycles), len(here))
    reps = [cycles[p - len(boundaries)] for p in chosen if p >= len(boundaries)]
    return len(reps), [{here[a]: v for a, v in enumerate(r) if v} for r in reps]


def cohomology_dimensions(c: Complex) -> dict[int, int]:
    """Nonzero cohomology dimensions by degree."""
    dims = {}
    for n in c.occupied_degrees():
        d, _ = cohomology(c, n)
        if d:
            dims[n] = d
    return dims


def is_acyclic(c: Complex) -> bool:
    return not cohomology_dimensions(c)


def euler_char(c: Complex) -> int:
    """Σ (-1)^n dim C^n."""
    return c.euler_characteristic()


def euler_char_from_cohomology(c: Complex) -> int:
    """Σ (-1)^n dim H^n(C); equal to euler_char for every finite complex."""
    return sum(d if n % 2 == 0 else -d for n, d in cohomology_dimensions(c).items())


def chi(x: TwistedComplex, y: TwistedComplex) -> int:
    """Euler pairing χ(X, Y) = χ(Hom(X, Y))."""
    return euler_char(hom_complex(x, y))
