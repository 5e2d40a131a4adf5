"""
DGKIT TWISTED COMPLEXES

One-sided twisted complexes ⊕ a_i[n_i] over a finite DG category, and the
closed morphisms between them.

Conventions:
    twist[(j, i)] = α_ji ∈ Hom(a_i, a_j), of degree 1 + n_j - n_i, only j < i
    Maurer–Cartan: (-1)^{n_j} dα_ji + Σ_k α_jk ∘ α_ki = 0
    X[n]: every shift + n, twist scaled by (-1)^n
    cone(f: X → Y): entries of Y, then X[1]; twist [[α_Y, f], [0, -α_X]]
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from src.contracts.errors import MaurerCartanError, ShapeMismatchError, UnknownObjectError
from src.contracts.interfaces import IDGCategory
from src.lattice.field import SparseVector, add_scaled, scaled

logger = logging.getLogger(__name__)

Entry = tuple[str, int]


def _clean(table: Mapping[tuple[int, int], SparseVector]) -> dict[tuple[int, int], SparseVector]:
    return {k: dict(v) for k, v in table.items() if v}


# ═══════════════════════════════════════════════════════════════════════════
# TWISTED COMPLEX
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True, eq=False)
class TwistedComplex:
    """
    A perfect object: formal shifts of representables plus a one-sided twist.

    One-sidedness and degrees are enforced on construction. Maurer–Cartan is
    checked by check_maurer_cartan(); build() does both.
    """
    category: IDGCategory
    entries: tuple[Entry, ...]
    twist: Mapping[tuple[int, int], SparseVector] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple((a, int(n)) for a, n in self.entries))
        object.__setattr__(self, "twist", _clean(self.twist))
        for a, _ in self.entries:
            if a not in self.category.objects:
                raise UnknownObjectError(f"unknown object {a!r} in twisted complex")
        for (j, i), alpha in self.twist.items():
            if not 0 <= j < i < len(self.entries):
                raise MaurerCartanError(f"twist component ({j}, {i}) is not strictly one-sided")
            (aj, nj), (ai, ni) = self.entries[j], self.entries[i]
            basis = self.category.basis(ai, aj)
            want = 1 + nj - ni
            for t in alpha:
                if basis[t].degree != want:
                    raise MaurerCartanError(
                        f"twist ({j}, {i}) contains {basis[t].name} of degree "
                        f"{basis[t].degree}, expected {want}"
                    )

    # ─── Construction ─────────────────────────────────────────────────────────

    @classmethod
    def build(cls, category: IDGCategory, entries: Iterable[Entry],
              twist: Mapping[tuple[int, int], SparseVector] | None = None) -> "TwistedComplex":
        x = cls(category, tuple(entries), twist or {})
        x.check_maurer_cartan()
        return x

    @classmethod
    def representable(cls, category: IDGCategory, a: str, shift: int = 0) -> "TwistedComplex":
        return cls(category, ((a, shift),))

    @classmethod
    def zero(cls, category: IDGCategory) -> "TwistedComplex":
        return cls(category, ())

    def __len__(self) -> int:
        return len(self.entries)

    def alpha(self, j: int, i: int) -> SparseVector:
        return self.twist.get((j, i), {})

    # ─── Maurer–Cartan ────────────────────────────────────────────────────────

    def maurer_cartan_defect(self) -> dict[tuple[int, int], SparseVector]:
        c = self.category
        k = c.field
        defect = {}
        for (j, i) in {(j, i) for j in range(len(self)) for i in range(j + 1, len(self))}:
            (aj, nj), (ai, _) = self.entries[j], self.entries[i]
            value = scaled(c.d(ai, aj, self.alpha(j, i)), k.sign(nj))
            for m in range(j + 1, i):
                left, right = self.alpha(j, m), self.alpha(m, i)
                if left and right:
                    add_scaled(value, c.compose(ai, self.entries[m][0], aj, left, right), k.one)
            if value:
                defect[(j, i)] = value
        return defect

    def is_maurer_cartan(self) -> bool:
        return not self.maurer_cartan_defect()

    def check_maurer_cartan(self) -> None:
        defect = self.maurer_cartan_defect()
        if defect:
            (j, i), value = min(defect.items())
            aj, ai = self.entries[j][0], self.entries[i][0]
            raise MaurerCartanError(
                f"Maurer–Cartan fails at ({j}, {i}): {self.category.format_element(ai, aj, value)}"
            )

    # ─── Equality ─────────────────────────────────────────────────────────────

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwistedComplex):
            return NotImplemented
        return (
            (self.category is other.category or self.category == other.category)
            and self.entries == other.entries
            and self.twist == other.twist
        )

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        return " + ".join(f"{a}[{n}]" if n else a for a, n in self.entries)


# ═══════════════════════════════════════════════════════════════════════════
# MORPHISMS
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True, eq=False)
class PerfMorphism:
    """
    A morphism X → Y of total degree `degree`.

    components[(j, i)] ∈ Hom(a_i, b_j) has category degree degree + m_j - n_i.
    """
    source: TwistedComplex
    target: TwistedComplex
    components: Mapping[tuple[int, int], SparseVector] = field(default_factory=dict)
    degree: int = 0

    def __post_init__(self):
        object.__setattr__(self, "components", _clean(self.components))
        c = self.source.category
        for (j, i), phi in self.components.items():
            if not (0 <= j < len(self.target) and 0 <= i < len(self.source)):
                raise ShapeMismatchError(f"component ({j}, {i}) outside {len(self.target)}x{len(self.source)}")
            (bj, mj), (ai, ni) = self.target.entries[j], self.source.entries[i]
            basis = c.basis(ai, bj)
            want = self.degree + mj - ni
            for t in phi:
                if basis[t].degree != want:
                    raise ShapeMismatchError(
                        f"component ({j}, {i}) contains {basis[t].name} of degree "
                        f"{basis[t].degree}, expected {want}"
                    )

    def component(self, j: int, i: int) -> SparseVector:
        return self.components.get((j, i), {})

    def is_closed(self) -> bool:
        from src.perfect.homs import total_differential
        return not total_differential(self).components

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PerfMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.degree == other.degree and self.components == other.components)

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.degree))


def identity_morphism(x: TwistedComplex) -> PerfMorphism:
    c = x.category
    return PerfMorphism(x, x, {(i, i): c.identity(a) for i, (a, _) in enumerate(x.entries)})


def zero_morphism(x: TwistedComplex, y: TwistedComplex, degree: int = 0) -> PerfMorphism:
    return PerfMorphism(x, y, {}, degree)


def compose_morphisms(g: PerfMorphism, f: PerfMorphism) -> PerfMorphism:
    """g ∘ f, componentwise (g∘f)_li = Σ_j g_lj ∘ f_ji."""
    if g.source != f.target:
        raise ShapeMismatchError("morphisms are not composable")
    c = f.source.category
    out: dict[tuple[int, int], SparseVector] = {}
    for (l, j), gv in g.components.items():
        for (j2, i), fv in f.components.items():
            if j2 != j:
                continue
            value = c.compose(f.source.entries[i][0], f.target.entries[j][0],
                              g.target.entries[l][0], gv, fv)
            add_scaled(out.setdefault((l, i), {}), value, c.field.one)
    return PerfMorphism(f.source, g.target, out, f.degree + g.degree)


# ═══════════════════════════════════════════════════════════════════════════
# SHIFT AND CONE
# ═══════════════════════════════════════════════════════════════════════════

def shift(x: TwistedComplex, n: int) -> TwistedComplex:
    """X[n]."""
    if n == 0:
        return x
    sign = x.category.field.sign(n)
    return TwistedComplex(
        x.category,
        tuple((a, s + n) for a, s in x.entries),
        {key: scaled(v, sign) for key, v in x.twist.items()},
    )


def cone(f: PerfMorphism) -> TwistedComplex:
    """
    Cone of a closed degree-0 morphism f: X → Y.

    Raises:
        MaurerCartanError: f is not closed (the assembled twist fails MC)
    """
    if f.degree != 0:
        raise ShapeMismatchError(f"cone needs a degree-0 morphism, got degree {f.degree}")
    x, y = f.source, f.target
    minus_one = -x.category.field.one
    offset = len(y)
    twist: dict[tuple[int, int], SparseVector] = dict(y.twist)
    for (j, i), v in x.twist.items():
        twist[(offset + j, offset + i)] = scaled(v, minus_one)
    for (j, i), v in f.components.items():
        twist[(j, offset + i)] = dict(v)
    entries = y.entries + tuple((a, n + 1) for a, n in x.entries)
    result = TwistedComplex(x.category, entries, twist)
    result.check_maurer_cartan()
    logger.debug(f"cone of {x} → {y}: {result}")
    return result
