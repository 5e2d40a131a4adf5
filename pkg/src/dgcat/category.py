"""
DGKIT DG CATEGORIES

Finite DG categories over a field, stored at basis level.

Each Hom(a, b) has a named graded basis. The differential and composition
are sparse structure constants:

    differential_table[(a, b)][j]          = d(e_j)
    composition_table[(a, b, c)][(i, j)]   = g_i ∘ f_j,  f_j ∈ Hom(a, b), g_i ∈ Hom(b, c)

Composition is written g ∘ f with f applied first, and satisfies
d(g ∘ f) = dg ∘ f + (-1)^|g| g ∘ df.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from src.config import get_settings
from src.contracts.errors import DegreeWindowError, UnknownObjectError
from src.contracts.interfaces import IDGCategory
from src.contracts.schemas import ValidationReport
from src.dgcat.complex import Complex
from src.lattice.field import CoefficientField, SparseVector, add_scaled

logger = logging.getLogger(__name__)

HomKey = tuple[str, str]
TripleKey = tuple[str, str, str]


@dataclass(frozen=True)
class BasisElement:
    """A named basis vector of a hom complex. length counts ξ factors."""
    name: str
    degree: int
    length: int = 0


@dataclass(frozen=True, eq=False)
class DGCategory(IDGCategory):
    """
    A finite DG category given by structure constants.

    Build with DGCategory.build so every ordered pair has a basis entry and
    the unit laws are filled in. Equality is literal equality of data.
    """
    coefficients: CoefficientField
    labels: tuple[str, ...]
    bases: Mapping[HomKey, tuple[BasisElement, ...]]
    differential_table: Mapping[HomKey, Mapping[int, SparseVector]]
    composition_table: Mapping[TripleKey, Mapping[tuple[int, int], SparseVector]]
    identity_index: Mapping[str, int]
    window: Optional[tuple[int, int]] = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate object labels in {self.labels}")
        if self.window is not None:
            lo, hi = self.window
            if hi - lo > get_settings().max_degree_span:
                raise DegreeWindowError(f"window [{lo}, {hi}] exceeds the configured span")
            for (a, b), basis in self.bases.items():
                for e in basis:
                    if not lo <= e.degree <= hi:
                        raise DegreeWindowError(
                            f"{e.name} in Hom({a}, {b}) has degree {e.degree} outside [{lo}, {hi}]"
                        )

    # ─── Construction ─────────────────────────────────────────────────────────

    @classmethod
    def build(
        cls,
        coefficients: CoefficientField,
        labels: Iterable[str],
        bases: Mapping[HomKey, Iterable[BasisElement]],
        differential: Mapping[HomKey, Mapping[int, SparseVector]],
        composition: Mapping[TripleKey, Mapping[tuple[int, int], SparseVector]],
        identity_index: Mapping[str, int],
        window: Optional[tuple[int, int]] = None,
    ) -> "DGCategory":
        """
        Normalize tables and add the unit-law structure constants.

        Structure constants already present for an identity are kept, so a
        broken unit law still shows up in validate().
        """
        labels = tuple(labels)
        full_bases = {(a, b): tuple(bases.get((a, b), ())) for a in labels for b in labels}
        diff = {
            key: {j: dict(v) for j, v in differential.get(key, {}).items() if v}
            for key in full_bases
        }
        comp: dict[TripleKey, dict[tuple[int, int], SparseVector]] = {}
        for key, table in composition.items():
            cleaned = {ij: dict(v) for ij, v in table.items() if v}
            if cleaned:
                comp[key] = cleaned
        one = coefficients.one
        for a in labels:
            for b in labels:
                for j in range(len(full_bases[(a, b)])):
                    left = comp.setdefault((a, b, b), {})
                    left.setdefault((identity_index[b], j), {j: one})
                    right = comp.setdefault((a, a, b), {})
                    right.setdefault((j, identity_index[a]), {j: one})
        if window is None:
            degrees = [e.degree for basis in full_bases.values() for e in basis]
            window = (min(degrees), max(degrees)) if degrees else None
        return cls(coefficients, labels, full_bases, diff, comp, dict(identity_index), window)

    @classmethod
    def empty(cls, coefficients: CoefficientField) -> "DGCategory":
        return cls.build(coefficients, (), {}, {}, {}, {})

    @classmethod
    def point(cls, coefficients: CoefficientField, label: str = "v") -> "DGCategory":
        """The category k: one object with Hom = k·id."""
        return cls.build(
            coefficients, (label,), {(label, label): (BasisElement(f"id_{label}", 0),)},
            {}, {}, {label: 0},
        )

    # ─── IDGCategory ──────────────────────────────────────────────────────────

    @property
    def field(self) -> CoefficientField:
        return self.coefficients

    @property
    def objects(self) -> tuple[str, ...]:
        return self.labels

    def require(self, *labels: str) -> None:
        for x in labels:
            if x not in self.labels:
                raise UnknownObjectError(f"unknown object {x!r}; objects are {list(self.labels)}")

    def basis(self, a: str, b: str) -> tuple[BasisElement, ...]:
        try:
            return self.bases[(a, b)]
        except KeyError:
            self.require(a, b)
            raise

    def hom(self, a: str, b: str) -> Complex:
        key = ("hom", a, b)
        if key not in self._cache:
            basis = self.basis(a, b)
            self._cache[key] = Complex.from_sparse(
                self.coefficients,
                [e.degree for e in basis],
                self.differential_table[(a, b)],
                [e.name for e in basis],
            )
        return self._cache[key]

    def d(self, a: str, b: str, x: SparseVector) -> SparseVector:
        table = self.differential_table[(a, b)]
        out: SparseVector = {}
        for j, c in x.items():
            if j in table:
                add_scaled(out, table[j], c)
        return out

    def compose(self, a: str, b: str, c: str, g: SparseVector, f: SparseVector) -> SparseVector:
        table = self.composition_table.get((a, b, c))
        out: SparseVector = {}
        if not table:
            return out
        for i, gi in g.items():
            for j, fj in f.items():
                entry = table.get((i, j))
                if entry:
                    add_scaled(out, entry, gi * fj)
        return out

    def identity(self, a: str) -> SparseVector:
        return {self.identity_index[a]: self.coefficients.one}

    def validate(self) -> ValidationReport:
        from src.dgcat.validation import validate
        return validate(self)

    # ─── Lookup ───────────────────────────────────────────────────────────────

    def locate(self, name: str) -> tuple[str, str, int]:
        """(source, target, index) of a basis element by name."""
        index = self._cache.get("names")
        if index is None:
            index = {}
            for (a, b), basis in self.bases.items():
                for i, e in enumerate(basis):
                    index[e.name] = (a, b, i)
            self._cache["names"] = index
        if name not in index:
            raise UnknownObjectError(f"no basis element named {name!r}")
        return index[name]

    def nonzero_pairs(self) -> list[HomKey]:
        return [(a, b) for a in self.labels for b in self.labels if self.bases[(a, b)]]

    # ─── Equality ─────────────────────────────────────────────────────────────

    def _data(self):
        return (
            self.coefficients,
            self.labels,
            dict(self.bases),
            {k: v for k, v in self.differential_table.items() if v},
            {k: v for k, v in self.composition_table.items() if v},
            dict(self.identity_index),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DGCategory):
            return NotImplemented
        return self._data() == other._data()

    def __hash__(self) -> int:
        return hash((self.coefficients, self.labels))

    def __repr__(self) -> str:
        dims = {f"{a}->{b}": len(v) for (a, b), v in self.bases.items() if v}
        return f"DGCategory(objects={list(self.labels)}, dims={dims})"
