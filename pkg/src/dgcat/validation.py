"""
DGKIT VALIDATION

Exhaustive basis-level check of the DG category axioms.

Works against IDGCategory, so base categories and materialized Drinfeld
quotients go through the same code. With max_length set, pairs and triples
whose ξ-lengths add up past it are skipped: their products fall outside the
materialized range.
"""

from __future__ import annotations

import logging
from typing import Optional

from src.contracts.interfaces import IDGCategory
from src.contracts.schemas import Axiom, AxiomViolation, ValidationReport
from src.lattice.field import SparseVector, add_scaled

logger = logging.getLogger(__name__)


def _unit(i: int, one) -> SparseVector:
    return {i: one}


def _difference(x: SparseVector, y: SparseVector, minus_one) -> SparseVector:
    out = dict(x)
    add_scaled(out, y, minus_one)
    return out


def validate(c: IDGCategory, max_length: Optional[int] = None) -> ValidationReport:
    """
    Check d² = 0, degree homogeneity, Leibniz, associativity and unit laws.

    Never raises for mathematical failures: every violated instance is
    listed with the basis names involved.
    """
    k = c.field
    one, minus_one = k.one, -k.one
    objs = c.objects
    violations: list[AxiomViolation] = []
    checked = skipped = 0

    def name(a, b, i):
        return c.basis(a, b)[i].name

    def too_long(*elements) -> bool:
        return max_length is not None and sum(e.length for e in elements) > max_length

    # ─── Differential ─────────────────────────────────────────────────────────
    for a in objs:
        for b in objs:
            basis = c.basis(a, b)
            for j, e in enumerate(basis):
                de = c.d(a, b, _unit(j, one))
                bad = [basis[i].name for i in de if basis[i].degree != e.degree + 1]
                if bad:
                    violations.append(AxiomViolation(
                        axiom=Axiom.DEGREE, elements=[e.name] + bad,
                        detail=f"d({e.name}) has terms outside degree {e.degree + 1}",
                    ))
                dde = c.d(a, b, de)
                if dde:
                    violations.append(AxiomViolation(
                        axiom=Axiom.D_SQUARED, elements=[e.name],
                        detail=f"d(d({e.name})) = {c.format_element(a, b, dde)}",
                    ))

    # ─── Units ────────────────────────────────────────────────────────────────
    for a in objs:
        ida = c.identity(a)
        if c.d(a, a, ida):
            violations.append(AxiomViolation(
                axiom=Axiom.D_SQUARED, elements=[name(a, a, i) for i in ida],
                detail=f"identity of {a} is not closed",
            ))
        for b in objs:
            idb = c.identity(b)
            for j in range(c.dim(a, b)):
                f = _unit(j, one)
                if c.compose(a, b, b, idb, f) != f:
                    violations.append(AxiomViolation(
                        axiom=Axiom.LEFT_UNIT, elements=[name(a, b, j)],
                        detail=f"id_{b} ∘ {name(a, b, j)} != {name(a, b, j)}",
                    ))
                if c.compose(a, a, b, f, ida) != f:
                    violations.append(AxiomViolation(
                        axiom=Axiom.RIGHT_UNIT, elements=[name(a, b, j)],
                        detail=f"{name(a, b, j)} ∘ id_{a} != {name(a, b, j)}",
                    ))

    # ─── Leibniz and degrees of products ─────────────────────────────────────
    for a in objs:
        for b in objs:
            fs = c.basis(a, b)
            if not fs:
                continue
            for cc in objs:
                gs = c.basis(b, cc)
                target = c.basis(a, cc)
                for i, g in enumerate(gs):
                    gv = _unit(i, one)
                    dg = c.d(b, cc, gv)
                    for j, f in enumerate(fs):
                        if too_long(g, f):
                            skipped += 1
                            continue
                        checked += 1
                        fv = _unit(j, one)
                        gf = c.compose(a, b, cc, gv, fv)
                        bad = [target[t].name for t in gf if target[t].degree != g.degree + f.degree]
                        if bad:
                            violations.append(AxiomViolation(
                                axiom=Axiom.DEGREE, elements=[g.name, f.name] + bad,
                                detail=f"{g.name} ∘ {f.name} is not homogeneous of degree "
                                       f"{g.degree + f.degree}",
                            ))
                        lhs = c.d(a, cc, gf)
                        rhs = c.compose(a, b, cc, dg, fv)
                        add_scaled(rhs, c.compose(a, b, cc, gv, c.d(a, b, fv)), k.sign(g.degree))
                        residual = _difference(lhs, rhs, minus_one)
                        if residual:
                            violations.append(AxiomViolation(
                                axiom=Axiom.LEIBNIZ, elements=[g.name, f.name],
                                detail=f"d({g.name} ∘ {f.name}) - (dg ∘ f ± g ∘ df) = "
                                       f"{c.format_element(a, cc, residual)}",
                            ))

    # ─── Associativity ───────────────────────────────────────────────────────
    for a in objs:
        for b in objs:
            fs = c.basis(a, b)
            if not fs:
                continue
            for cc in objs:
                gs = c.basis(b, cc)
                if not gs:
                    continue
                for dd in objs:
                    hs = c.basis(cc, dd)
                    for h_i, h in enumerate(hs):
                        hv = _unit(h_i, one)
                        for g_i, g in enumerate(gs):
                            gv = _unit(g_i, one)
                            hg = c.compose(b, cc, dd, hv, gv)
                            for f_i, f in enumerate(fs):
                                if too_long(h, g, f):
                                    continue
                                fv = _unit(f_i, one)
                                left = c.compose(a, b, dd, hg, fv)
                                right = c.compose(a, cc, dd, hv, c.compose(a, b, cc, gv, fv))
                                if left != right:
                                    violations.append(AxiomViolation(
                                        axiom=Axiom.ASSOCIATIVITY, elements=[h.name, g.name, f.name],
                                        detail=f"({h.name} ∘ {g.name}) ∘ {f.name} != "
                                               f"{h.name} ∘ ({g.name} ∘ {f.name})",
                                    ))

    report = ValidationReport(violations=violations, checked_pairs=checked, skipped_pairs=skipped)
    logger.info(
        f"validated {len(objs)} objects: {len(violations)} violations, "
        f"{checked} pairs checked, {skipped} skipped"
    )
    return report
