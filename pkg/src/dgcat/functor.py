"""
DGKIT DG FUNCTORS

DG functors between finite DG categories, full subcategories with their
inclusions, opposite categories and relabelings of objects.

Opposite convention: f ∘op g = (-1)^{|f||g|} g ∘ f, differential unchanged.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Mapping

from src.contracts.errors import ShapeMismatchError, UnknownObjectError
from src.contracts.interfaces import IDGCategory
from src.contracts.schemas import Axiom, AxiomViolation, ValidationReport
from src.dgcat.category import BasisElement, DGCategory
from src.lattice.field import FieldMatrix, SparseVector, add_scaled

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DGFunctor:
    """
    Object map plus one matrix per hom: hom_maps[(a, b)] sends the basis of
    Hom_source(a, b) to Hom_target(F a, F b), column j = F(e_j).
    """
    source: IDGCategory
    target: IDGCategory
    object_map: Mapping[str, str]
    hom_maps: Mapping[tuple[str, str], FieldMatrix]

    def __post_init__(self):
        for a in self.source.objects:
            if a not in self.object_map:
                raise UnknownObjectError(f"functor does not map object {a!r}")
            if self.object_map[a] not in self.target.objects:
                raise UnknownObjectError(f"{a!r} maps to unknown object {self.object_map[a]!r}")
        for a in self.source.objects:
            for b in self.source.objects:
                m = self.hom_maps.get((a, b))
                expected = (self.target.dim(self.object_map[a], self.object_map[b]),
                            self.source.dim(a, b))
                if m is None or m.shape != expected:
                    raise ShapeMismatchError(f"hom map for ({a}, {b}) must have shape {expected}")

    @classmethod
    def identity(cls, c: IDGCategory) -> "DGFunctor":
        return cls(c, c, {a: a for a in c.objects}, {
            (a, b): FieldMatrix.identity(c.field, c.dim(a, b))
            for a in c.objects for b in c.objects
        })

    def __call__(self, a: str) -> str:
        return self.object_map[a]

    def apply(self, a: str, b: str, x: SparseVector) -> SparseVector:
        """F on an element of Hom(a, b)."""
        m = self.hom_maps[(a, b)]
        out: SparseVector = {}
        for j, c in x.items():
            add_scaled(out, m.sparse_column(j), c)
        return out

    def validate(self) -> ValidationReport:
        """Check degrees, compatibility with d, composition and identities."""
        s, t = self.source, self.target
        one = s.field.one
        violations: list[AxiomViolation] = []
        for a in s.objects:
            fa = self(a)
            if self.apply(a, a, s.identity(a)) != t.identity(fa):
                violations.append(AxiomViolation(
                    axiom=Axiom.FUNCTORIALITY, elements=[f"id_{a}"], detail="identity not preserved",
                ))
            for b in s.objects:
                fb = self(b)
                for j, e in enumerate(s.basis(a, b)):
                    ev = {j: one}
                    image = self.apply(a, b, ev)
                    tb = t.basis(fa, fb)
                    if any(tb[i].degree != e.degree for i in image):
                        violations.append(AxiomViolation(
                            axiom=Axiom.DEGREE, elements=[e.name], detail="degree not preserved",
                        ))
                    if self.apply(a, b, s.d(a, b, ev)) != t.d(fa, fb, image):
                        violations.append(AxiomViolation(
                            axiom=Axiom.CHAIN_MAP, elements=[e.name], detail="F(de) != dF(e)",
                        ))
                    for c in s.objects:
                        for i, g in enumerate(s.basis(b, c)):
                            gv = {i: one}
                            lhs = self.apply(a, c, s.compose(a, b, c, gv, ev))
                            rhs = t.compose(fa, fb, self(c), self.apply(b, c, gv), image)
                            if lhs != rhs:
                                violations.append(AxiomViolation(
                                    axiom=Axiom.FUNCTORIALITY, elements=[g.name, e.name],
                                    detail="F(g ∘ f) != F(g) ∘ F(f)",
                                ))
        return ValidationReport(violations=violations)


# ═══════════════════════════════════════════════════════════════════════════
# CONSTRUCTIONS
# ═══════════════════════════════════════════════════════════════════════════

def full_subcategory(c: DGCategory, objs: Iterable[str]) -> tuple[DGCategory, DGFunctor]:
    """
    Full subcategory on objs (kept in c's object order) and its inclusion.
    """
    wanted = set(objs)
    for x in wanted:
        if x not in c.objects:
            raise UnknownObjectError(f"unknown object {x!r}; objects are {list(c.objects)}")
    labels = tuple(x for x in c.objects if x in wanted)
    sub = DGCategory(
        c.coefficients,
        labels,
        {(a, b): c.bases[(a, b)] for a in labels for b in labels},
        {(a, b): c.differential_table[(a, b)] for a in labels for b in labels},
        {
            key: table for key, table in c.composition_table.items()
            if all(x in wanted for x in key)
        },
        {a: c.identity_index[a] for a in labels},
        c.window,
    )
    inclusion = DGFunctor(sub, c, {a: a for a in labels}, {
        (a, b): FieldMatrix.identity(c.field, c.dim(a, b)) for a in labels for b in labels
    })
    logger.debug(f"full subcategory on {list(labels)} of {list(c.objects)}")
    return sub, inclusion


def opposite(c: DGCategory) -> DGCategory:
    """
    Hom_op(a, b) = Hom(b, a), with f ∘op g = (-1)^{|f||g|} g ∘ f.
    """
    k = c.coefficients
    bases = {(a, b): c.bases[(b, a)] for a in c.objects for b in c.objects}
    differential = {(a, b): c.differential_table[(b, a)] for a in c.objects for b in c.objects}
    composition: dict = {}
    for (x, y, z), table in c.composition_table.items():
        # table holds g_i ∘ f_j with f_j: x → y, g_i: y → z; in the opposite
        # category this is f_j ∘op g_i with g_i: z → y, f_j: y → x
        out = composition.setdefault((z, y, x), {})
        for (i, j), value in table.items():
            sign = k.sign(c.bases[(y, z)][i].degree * c.bases[(x, y)][j].degree)
            out[(j, i)] = {t: sign * v for t, v in value.items()}
    return DGCategory(
        k, c.objects, bases, differential, composition, dict(c.identity_index), c.window,
    )


def relabel_objects(c: DGCategory, mapping: Mapping[str, str]) -> tuple[DGCategory, DGFunctor]:
    """
    The same category with objects renamed through mapping, and the
    isomorphism c → relabeled. Identities named id_<object> follow their object.

    Raises:
        UnknownObjectError: mapping misses an object or is not injective
    """
    missing = [x for x in c.objects if x not in mapping]
    if missing:
        raise UnknownObjectError(f"relabeling does not cover objects {missing}")
    labels = tuple(mapping[x] for x in c.objects)
    if len(set(labels)) != len(labels):
        raise UnknownObjectError(f"relabeling {dict(mapping)} merges objects")

    def element(a: str, b: str, t: int) -> BasisElement:
        e = c.bases[(a, b)][t]
        if a == b and t == c.identity_index[a] and e.name == f"id_{a}":
            return BasisElement(f"id_{mapping[a]}", e.degree, e.length)
        return e

    bases = {
        (mapping[a], mapping[b]): tuple(element(a, b, t) for t in range(c.dim(a, b)))
        for a in c.objects for b in c.objects
    }
    renamed = DGCategory(
        c.coefficients,
        labels,
        bases,
        {(mapping[a], mapping[b]): table for (a, b), table in c.differential_table.items()},
        {
            (mapping[a], mapping[b], mapping[d]): table
            for (a, b, d), table in c.composition_table.items()
        },
        {mapping[a]: i for a, i in c.identity_index.items()},
        c.window,
    )
    iso = DGFunctor(c, renamed, {a: mapping[a] for a in c.objects}, {
        (a, b): FieldMatrix.identity(c.field, c.dim(a, b)) for a in c.objects for b in c.objects
    })
    return renamed, iso
