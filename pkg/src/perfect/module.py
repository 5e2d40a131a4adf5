"""
DGKIT MODULES

Right DG modules over a finite DG category: a fiber complex M_a per object
and, for each basis element f of Hom(a, b), the action m ↦ m·f from M_b to
M_a. Axioms:

    (m·g)·f = m·(g ∘ f)        m·id = m        d(m·f) = dm·f + (-1)^|m| m·df
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping

from src.contracts.interfaces import IDGCategory, IModule
from src.contracts.schemas import Axiom, AxiomViolation, ValidationReport
from src.dgcat.complex import Complex
from src.lattice.field import FieldMatrix, SparseVector, add_scaled
from src.perfect.homs import HomLayout, hom_complex
from src.perfect.twisted import TwistedComplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Module(IModule):
    """
    actions[(a, b)][t] is the matrix of m ↦ m·e_t, of shape dim M_a × dim M_b.
    """
    base: IDGCategory
    fibers: Mapping[str, Complex]
    actions: Mapping[tuple[str, str], tuple[FieldMatrix, ...]]

    @property
    def category(self) -> IDGCategory:
        return self.base

    def fiber(self, a: str) -> Complex:
        return self.fibers[a]

    def action(self, a: str, b: str, index: int) -> FieldMatrix:
        return self.actions[(a, b)][index]

    def act(self, a: str, b: str, m: SparseVector, f: SparseVector) -> SparseVector:
        """m·f for m ∈ M_b and f ∈ Hom(a, b)."""
        out: SparseVector = {}
        for t, ft in f.items():
            matrix = self.actions[(a, b)][t]
            for s, ms in m.items():
                add_scaled(out, matrix.sparse_column(s), ft * ms)
        return out

    def total_dimension(self) -> int:
        return sum(self.fibers[a].total_dimension for a in self.base.objects)

    def is_zero(self) -> bool:
        return self.total_dimension() == 0

    def validate(self) -> ValidationReport:
        c = self.base
        k = c.field
        one = k.one
        violations: list[AxiomViolation] = []
        for a in c.objects:
            ma = self.fibers[a]
            if not ma.d_squared_zero():
                violations.append(AxiomViolation(axiom=Axiom.D_SQUARED, elements=[f"M_{a}"]))
            for s in range(ma.total_dimension):
                m = {s: one}
                if self.act(a, a, m, c.identity(a)) != m:
                    violations.append(AxiomViolation(
                        axiom=Axiom.RIGHT_UNIT, elements=[f"M_{a}[{s}]"], detail="m·id != m",
                    ))

        for a in c.objects:
            for b in c.objects:
                mb = self.fibers[b]
                for t, f in enumerate(c.basis(a, b)):
                    fv = {t: one}
                    df = c.d(a, b, fv)
                    for s in range(mb.total_dimension):
                        m = {s: one}
                        residual = self.fibers[a].d(self.act(a, b, m, fv))
                        add_scaled(residual, self.act(a, b, mb.d(m), fv), -one)
                        add_scaled(residual, self.act(a, b, m, df), -k.sign(mb.degrees[s]))
                        if residual:
                            violations.append(AxiomViolation(
                                axiom=Axiom.LEIBNIZ, elements=[f"M_{b}[{s}]", f.name],
                            ))

        for a in c.objects:
            for b in c.objects:
                for cc in c.objects:
                    mc = self.fibers[cc]
                    for t, f in enumerate(c.basis(a, b)):
                        fv = {t: one}
                        for u, g in enumerate(c.basis(b, cc)):
                            gv = {u: one}
                            gf = c.compose(a, b, cc, gv, fv)
                            for r in range(mc.total_dimension):
                                mr = {r: one}
                                left = self.act(a, b, self.act(b, cc, mr, gv), fv)
                                if left != self.act(a, cc, mr, gf):
                                    violations.append(AxiomViolation(
                                        axiom=Axiom.ASSOCIATIVITY,
                                        elements=[f"M_{cc}[{r}]", g.name, f.name],
                                    ))
        logger.debug(f"module validation: {len(violations)} violations")
        return ValidationReport(violations=violations)


# ═══════════════════════════════════════════════════════════════════════════
# CONSTRUCTIONS
# ═══════════════════════════════════════════════════════════════════════════

def _action_matrix(k, rows: int, columns: list[SparseVector]) -> FieldMatrix:
    return FieldMatrix.from_sparse_columns(k, columns, rows)


def representable_module(c: IDGCategory, target: str) -> Module:
    """h_target: a ↦ Hom(a, target), acting by precomposition."""
    one = c.field.one
    fibers = {a: c.hom(a, target) for a in c.objects}
    actions = {}
    for a in c.objects:
        for b in c.objects:
            mats = []
            for t in range(c.dim(a, b)):
                cols = [c.compose(a, b, target, {s: one}, {t: one}) for s in range(c.dim(b, target))]
                mats.append(_action_matrix(c.field, c.dim(a, target), cols))
            actions[(a, b)] = tuple(mats)
    return Module(c, fibers, actions)


def zero_module(c: IDGCategory) -> Module:
    fibers = {a: Complex.zero(c.field) for a in c.objects}
    actions = {
        (a, b): tuple(FieldMatrix.zeros(c.field, 0, 0) for _ in range(c.dim(a, b)))
        for a in c.objects for b in c.objects
    }
    return Module(c, fibers, actions)


def module_of(x: TwistedComplex) -> Module:
    """
    The module a ↦ Hom(h_a, X) realized by a twisted complex.

    An element φ of Hom(h_b, X) has components φ_j ∈ Hom(b, x_j); the action
    of f ∈ Hom(a, b) is φ_j ↦ φ_j ∘ f.
    """
    c = x.category
    one = c.field.one
    reps = {a: TwistedComplex.representable(c, a) for a in c.objects}
    layouts = {a: HomLayout.of(reps[a], x) for a in c.objects}
    fibers = {a: hom_complex(reps[a], x) for a in c.objects}
    actions = {}
    for a in c.objects:
        for b in c.objects:
            mats = []
            for t in range(c.dim(a, b)):
                cols = []
                for (j, _, s) in layouts[b].cells:
                    xj = x.entries[j][0]
                    image = c.compose(a, b, xj, {s: one}, {t: one})
                    cols.append({layouts[a].index[(j, 0, u)]: v for u, v in image.items()})
                mats.append(_action_matrix(c.field, len(layouts[a].cells), cols))
            actions[(a, b)] = tuple(mats)
    return Module(c, fibers, actions)


def hom_to_module(x: TwistedComplex, m: Module) -> Complex:
    """
    Hom(X, M) for a twisted complex X and a module M.

    A degree-p element has components φ_i ∈ M_{a_i} of degree p - n_i, and

        D(φ)_i = d φ_i - (-1)^p Σ_k φ_k · α_ki
    """
    c = x.category
    k = c.field
    cells, degrees, index = [], [], {}
    for i, (a, n) in enumerate(x.entries):
        fiber = m.fiber(a)
        for s, deg in enumerate(fiber.degrees):
            index[(i, s)] = len(cells)
            cells.append((i, s))
            degrees.append(deg + n)
    columns: dict[int, SparseVector] = {}
    for col, (i, s) in enumerate(cells):
        a = x.entries[i][0]
        vec: SparseVector = {}
        for u, v in m.fiber(a).d({s: k.one}).items():
            vec[index[(i, u)]] = v
        minus = -k.sign(degrees[col])
        for ii in range(i + 1, len(x)):
            alpha = x.alpha(i, ii)
            if alpha:
                image = m.act(x.entries[ii][0], a, {s: k.one}, alpha)
                for u, v in image.items():
                    key = index[(ii, u)]
                    total = vec.get(key, k.zero) + minus * v
                    if total:
                        vec[key] = total
                    else:
                        vec.pop(key, None)
        if vec:
            columns[col] = vec
    return Complex.from_sparse(k, degrees, columns)
