"""
DGKIT DRINFELD QUOTIENT

The DG quotient A/I obtained by adjoining, for every object c of I, an
endomorphism ξ_c of degree -1 with dξ_c = id_c, truncated at a maximal
number of ξ factors.

A basis element of Hom_{A/I}(a, b) is a ξ-path

    f_n ∘ ξ_{c_n} ∘ f_{n-1} ∘ ... ∘ ξ_{c_1} ∘ f_0      c_k ∈ I, n ≤ depth

with every f_k a basis element of A, of degree Σ|f_k| - n. The differential
follows Leibniz: each factor in turn is differentiated (ξ_c becomes id_c and
its neighbours compose in A), with sign (-1)^{sum of the degrees of the
factors to its left}. Composition concatenates paths and composes the two
abutting factors in A; products longer than depth are dropped, so Leibniz
holds exactly on pairs whose lengths add up to at most depth.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Optional

from src.config import get_settings
from src.contracts.errors import DepthError, TrustWindowError, UnknownObjectError
from src.contracts.interfaces import IDGCategory
from src.contracts.schemas import ValidationReport
from src.dgcat.category import BasisElement
from src.dgcat.complex import Complex
from src.dgcat.functor import DGFunctor
from src.lattice.field import CoefficientField, FieldMatrix, SparseVector, add_scaled
from src.perfect.homs import cohomology, cohomology_dimensions

logger = logging.getLogger(__name__)

HomKey = tuple[str, str]
# (route a, c_1, ..., c_n, b ; factor indices f_0, ..., f_n)
PathKey = tuple[tuple[str, ...], tuple[int, ...]]


# ═══════════════════════════════════════════════════════════════════════════
# TRUST WINDOW
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class TrustWindow:
    """
    Degrees of each quotient hom whose cohomology does not depend on the
    truncation.

    unbounded: pairs with no ξ-path at all; every degree is exact.
    lower: pairs where every degree >= lower[(a, b)] is exact.
    Any other pair has no trusted degree.
    """
    depth: int
    unbounded: frozenset[HomKey]
    lower: Mapping[HomKey, int]

    def trusts(self, a: str, b: str, degree: int) -> bool:
        if (a, b) in self.unbounded:
            return True
        bound = self.lower.get((a, b))
        return bound is not None and degree >= bound

    def describe(self, a: str, b: str) -> str:
        if (a, b) in self.unbounded:
            return "all degrees"
        if (a, b) in self.lower:
            return f"degrees >= {self.lower[(a, b)]}"
        return "none"


def _max_degree(c: IDGCategory, a: str, b: str) -> Optional[int]:
    degrees = c.degrees(a, b)
    return max(degrees) if degrees else None


def compute_trust_window(a_cat: IDGCategory, contracted: tuple[str, ...], depth: int) -> TrustWindow:
    """
    Bound the degrees reached by the paths the truncation leaves out.

    A path of length n from a to b has degree at most h_a + h_b + (n-1)·h_I - n,
    where h_a, h_b bound the degrees into and out of I and h_I the degrees
    inside I. With h_I = 0 the missing paths sit in degrees <= h_a + h_b - depth - 1,
    so H^m is exact from m = h_a + h_b - depth + 1 on. With h_I >= 1 the
    bound no longer falls with depth: h_I = 1 fixes it at h_a + h_b - 1 and
    larger h_I lets it grow with n. No degree is trusted in either case.
    """
    inner = [_max_degree(a_cat, c, d) for c in contracted for d in contracted]
    h_inner = max((h for h in inner if h is not None), default=0)
    unbounded, lower = set(), {}
    for a in a_cat.objects:
        for b in a_cat.objects:
            into = [_max_degree(a_cat, a, c) for c in contracted]
            out_of = [_max_degree(a_cat, c, b) for c in contracted]
            if all(i is None for i in into) or all(o is None for o in out_of):
                unbounded.add((a, b))
            elif h_inner <= 0:
                h_a = max(i for i in into if i is not None)
                h_b = max(o for o in out_of if o is not None)
                lower[(a, b)] = h_a + h_b - depth + 1
    return TrustWindow(depth, frozenset(unbounded), lower)


# ═══════════════════════════════════════════════════════════════════════════
# QUOTIENT CATEGORY
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True, eq=False)
class QuotientCategory(IDGCategory):
    """A/I truncated at depth ξ factors. Objects are those of A."""
    base: IDGCategory
    contracted: tuple[str, ...]
    depth: int
    trust: TrustWindow
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def field(self) -> CoefficientField:
        return self.base.field

    @property
    def objects(self) -> tuple[str, ...]:
        return self.base.objects

    # ─── Paths ────────────────────────────────────────────────────────────────

    def paths(self, a: str, b: str) -> tuple[PathKey, ...]:
        """All ξ-paths from a to b, shortest first, length 0 in the order of A."""
        key = ("paths", a, b)
        if key not in self._cache:
            if a not in self.objects or b not in self.objects:
                raise UnknownObjectError(f"unknown object in ({a!r}, {b!r})")
            found: list[PathKey] = []
            for n in range(self.depth + 1):
                for middle in product(self.contracted, repeat=n):
                    route = (a,) + middle + (b,)
                    ranges = [range(self.base.dim(route[k], route[k + 1])) for k in range(n + 1)]
                    found.extend((route, fs) for fs in product(*ranges))
            self._cache[key] = tuple(found)
            self._cache[("index", a, b)] = {p: i for i, p in enumerate(found)}
        return self._cache[key]

    def _index(self, a: str, b: str) -> dict[PathKey, int]:
        self.paths(a, b)
        return self._cache[("index", a, b)]

    def _element(self, path: PathKey) -> BasisElement:
        route, fs = path
        n = len(route) - 2
        factors = [self.base.basis(route[k], route[k + 1])[fs[k]] for k in range(n + 1)]
        parts = [factors[n].name]
        for k in range(n, 0, -1):
            parts += [f"ξ_{route[k]}", factors[k - 1].name]
        return BasisElement("∘".join(parts), sum(f.degree for f in factors) - n, n)

    # ─── IDGCategory ──────────────────────────────────────────────────────────

    def basis(self, a: str, b: str) -> tuple[BasisElement, ...]:
        key = ("basis", a, b)
        if key not in self._cache:
            self._cache[key] = tuple(self._element(p) for p in self.paths(a, b))
        return self._cache[key]

    def hom(self, a: str, b: str) -> Complex:
        key = ("hom", a, b)
        if key not in self._cache:
            basis = self.basis(a, b)
            one = self.field.one
            columns = {j: self.d(a, b, {j: one}) for j in range(len(basis))}
            self._cache[key] = Complex.from_sparse(
                self.field, [e.degree for e in basis], columns, [e.name for e in basis],
            )
            logger.debug(f"quotient Hom({a}, {b}): {len(basis)} paths")
        return self._cache[key]

    def _d_path(self, a: str, b: str, path: PathKey) -> SparseVector:
        route, fs = path
        n = len(route) - 2
        k_field = self.field
        one = k_field.one
        index = self._index(a, b)
        out: SparseVector = {}
        running = 0
        for k in range(n, -1, -1):
            src, dst = route[k], route[k + 1]
            sign = k_field.sign(running)
            for t, v in self.base.d(src, dst, {fs[k]: one}).items():
                add_scaled(out, {index[(route, fs[:k] + (t,) + fs[k + 1:])]: v}, sign)
            running += self.base.basis(src, dst)[fs[k]].degree
            if k == 0:
                break
            # ξ_{c_k} sits between f_k and f_{k-1}
            sign = k_field.sign(running)
            joined = self.base.compose(route[k - 1], src, dst, {fs[k]: one}, {fs[k - 1]: one})
            short_route = route[:k] + route[k + 1:]
            for t, v in joined.items():
                add_scaled(out, {index[(short_route, fs[:k - 1] + (t,) + fs[k + 1:])]: v}, sign)
            running -= 1
        return out

    def d(self, a: str, b: str, x: SparseVector) -> SparseVector:
        paths = self.paths(a, b)
        out: SparseVector = {}
        for j, c in x.items():
            key = ("d", a, b, j)
            if key not in self._cache:
                self._cache[key] = self._d_path(a, b, paths[j])
            add_scaled(out, self._cache[key], c)
        return out

    def compose(self, a: str, b: str, c: str, g: SparseVector, f: SparseVector) -> SparseVector:
        f_paths, g_paths = self.paths(a, b), self.paths(b, c)
        index = self._index(a, c)
        one = self.field.one
        out: SparseVector = {}
        for i, gi in g.items():
            g_route, g_fs = g_paths[i]
            for j, fj in f.items():
                f_route, f_fs = f_paths[j]
                if len(g_route) + len(f_route) - 4 > self.depth:
                    continue
                joined = self.base.compose(
                    f_route[-2], b, g_route[1], {g_fs[0]: one}, {f_fs[-1]: one},
                )
                route = f_route[:-1] + g_route[1:]
                for t, v in joined.items():
                    add_scaled(out, {index[(route, f_fs[:-1] + (t,) + g_fs[1:])]: v}, gi * fj)
        return out

    def identity(self, a: str) -> SparseVector:
        return dict(self.base.identity(a))

    def validate(self) -> ValidationReport:
        """Axioms on the materialized range: pairs whose lengths add past depth are skipped."""
        from src.dgcat.validation import validate
        return validate(self, max_length=self.depth)

    def __repr__(self) -> str:
        return f"QuotientCategory(objects={list(self.objects)}, contracted={list(self.contracted)}, depth={self.depth})"


# ═══════════════════════════════════════════════════════════════════════════
# OPERATIONS
# ═══════════════════════════════════════════════════════════════════════════

def drinfeld_quotient(a_cat: IDGCategory, contracted: Iterable[str],
                      depth: Optional[int] = None) -> QuotientCategory:
    """
    Materialize A/I up to depth ξ factors.

    Raises:
        DepthError: depth < 2
        UnknownObjectError: an object of I is not in A
        DegreeWindowError: a quotient hom exceeds the configured degree span
    """
    depth = get_settings().default_depth if depth is None else depth
    if depth < 2:
        raise DepthError(f"quotient depth must be at least 2, got {depth}")
    wanted = set(contracted)
    unknown = sorted(wanted - set(a_cat.objects))
    if unknown:
        raise UnknownObjectError(f"objects {unknown} to contract are not in the category")
    ordered = tuple(x for x in a_cat.objects if x in wanted)
    trust = compute_trust_window(a_cat, ordered, depth)
    q = QuotientCategory(a_cat, ordered, depth, trust)
    for a in q.objects:
        for b in q.objects:
            q.hom(a, b)
    logger.info(f"materialized {q!r}")
    return q


def h0_hom(q: QuotientCategory, a: str, b: str) -> tuple[int, list[SparseVector]]:
    """
    H^0 of Hom_{A/I}(a, b) with representative cocycles in the ξ-path basis.

    Raises:
        TrustWindowError: degree 0 is not trusted at this depth
    """
    if not q.trust.trusts(a, b, 0):
        raise TrustWindowError(
            f"H^0 of Hom({a}, {b}) is not trusted at depth {q.depth} "
            f"(trusted: {q.trust.describe(a, b)}); increase --depth"
        )
    return cohomology(q.hom(a, b), 0)


def quotient_functor(q: QuotientCategory) -> DGFunctor:
    """q: A → A/I, the identity on objects and the inclusion of length-0 paths."""
    k = q.field
    hom_maps = {}
    for a in q.objects:
        for b in q.objects:
            n = q.base.dim(a, b)
            hom_maps[(a, b)] = FieldMatrix.from_sparse_columns(
                k, [{t: k.one} for t in range(n)], q.dim(a, b),
            )
    return DGFunctor(q.base, q, {a: a for a in q.objects}, hom_maps)


def gram_from_quotient(q: QuotientCategory, objects: Iterable[str]) -> list[list[int]]:
    """
    χ(a, b) on the quotient from trusted cohomology.

    Cohomology is assumed to stop once the lowest trusted degree is acyclic.

    Raises:
        TrustWindowError: a pair has no trusted degrees, or the lowest
            trusted degree carries cohomology
    """
    objects = list(objects)
    gram = []
    for a in objects:
        row = []
        for b in objects:
            if (a, b) not in q.trust.unbounded and (a, b) not in q.trust.lower:
                raise TrustWindowError(f"no trusted degrees for Hom({a}, {b}) in {q!r}")
            dims = cohomology_dimensions(q.hom(a, b))
            bound = q.trust.lower.get((a, b))
            if bound is not None:
                if bound in dims:
                    raise TrustWindowError(
                        f"Hom({a}, {b}) has cohomology in the lowest trusted degree {bound}; "
                        f"χ is not determined at depth {q.depth}"
                    )
                dims = {n: d for n, d in dims.items() if n > bound}
            row.append(sum(d if n % 2 == 0 else -d for n, d in dims.items()))
        gram.append(row)
    logger.debug(f"quotient gram on {objects}: {gram}")
    return gram
