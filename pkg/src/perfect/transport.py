"""
DGKIT TRANSPORT

Extension of scalars F*(X) for twisted complexes along a DG functor, and
restriction of scalars F_*(M) for modules.
"""

from __future__ import annotations

from src.dgcat.functor import DGFunctor
from src.lattice.field import FieldMatrix
from src.perfect.module import Module
from src.perfect.twisted import PerfMorphism, TwistedComplex


def extend_scalars(f: DGFunctor, x: TwistedComplex) -> TwistedComplex:
    """Relabel entries through F and push the twist through F's hom maps."""
    entries = tuple((f(a), n) for a, n in x.entries)
    twist = {
        (j, i): f.apply(x.entries[i][0], x.entries[j][0], alpha)
        for (j, i), alpha in x.twist.items()
    }
    return TwistedComplex(f.target, entries, twist)


def extend_morphism(f: DGFunctor, phi: PerfMorphism) -> PerfMorphism:
    """F* on a morphism of twisted complexes."""
    components = {
        (j, i): f.apply(phi.source.entries[i][0], phi.target.entries[j][0], v)
        for (j, i), v in phi.components.items()
    }
    return PerfMorphism(
        extend_scalars(f, phi.source), extend_scalars(f, phi.target), components, phi.degree
    )


def restrict_module(f: DGFunctor, m: Module) -> Module:
    """M ↦ M∘F: fiber over a is M_{F a}, actions pulled back along F."""
    s = f.source
    k = s.field
    fibers = {a: m.fiber(f(a)) for a in s.objects}
    actions = {}
    for a in s.objects:
        for b in s.objects:
            rows, cols = fibers[a].total_dimension, fibers[b].total_dimension
            mats = []
            for t in range(s.dim(a, b)):
                image = f.hom_maps[(a, b)].sparse_column(t)
                data = [[k.zero] * cols for _ in range(rows)]
                for u, coeff in image.items():
                    action = m.action(f(a), f(b), u)
                    for r in range(rows):
                        for c in range(cols):
                            data[r][c] += coeff * action.data[r][c]
                mats.append(FieldMatrix.from_rows(k, data, cols))
            actions[(a, b)] = tuple(mats)
    return Module(s, fibers, actions)
