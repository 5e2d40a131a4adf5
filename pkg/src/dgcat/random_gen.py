"""
DGKIT RANDOM CATEGORIES

Seeded random graded quivers with relations, for the fuzz suites and the
`fuzz` command. Validity holds by construction: every sample goes through
from_quiver.

Shape: at most max_objects vertices, arrows only from lower to higher
vertex index plus optional square-zero loops, arrow degrees in [-1, 1],
all paths of length 3 killed. Hom degrees therefore stay in [-2, 2]; homs
larger than max_dim are cut down with extra monomial relations.
"""

from __future__ import annotations

import logging
import random
from typing import Optional

from src.dgcat.category import DGCategory
from src.dgcat.quiver import Arrow, QuiverPresentation, from_quiver
from src.lattice.field import CoefficientField

logger = logging.getLogger(__name__)


def _paths(arrows: list[Arrow], length: int) -> list[list[Arrow]]:
    frontier = [[a] for a in arrows]
    for _ in range(length - 1):
        frontier = [p + [a] for p in frontier for a in arrows if a.source == p[-1].target]
    return frontier


def _name(path: list[Arrow]) -> str:
    return "*".join(a.name for a in reversed(path))


def random_quiver(rng: random.Random, max_objects: int = 4) -> QuiverPresentation:
    n = rng.randint(1, max_objects)
    vertices = tuple(f"v{i}" for i in range(n))
    arrows: list[Arrow] = []
    relations: list[dict] = []

    for i in range(n):
        for j in range(i + 1, n):
            for _ in range(rng.choice((0, 0, 1, 1, 2))):
                arrows.append(Arrow(f"a{len(arrows)}", vertices[i], vertices[j], rng.choice((0, 0, 0, 1, -1))))
    for v in vertices:
        if rng.random() < 0.25:
            loop = Arrow(f"l{len(arrows)}", v, v, 0)
            arrows.append(loop)
            relations.append({f"{loop.name}*{loop.name}": 1})

    # length-2 paths: monomial kills and binomial identifications
    groups: dict[tuple, list[str]] = {}
    for p in _paths(arrows, 2):
        key = (p[0].source, p[-1].target, sum(a.degree for a in p))
        groups.setdefault(key, []).append(_name(p))
    for names in groups.values():
        names = [x for x in names if {x: 1} not in relations]
        if len(names) >= 2 and rng.random() < 0.5:
            first, second = rng.sample(names, 2)
            relations.append({first: 1, second: rng.choice((-1, 1, 2))})
        elif names and rng.random() < 0.3:
            relations.append({rng.choice(names): 1})

    for p in _paths(arrows, 3):
        relations.append({_name(p): 1})

    return QuiverPresentation(vertices, tuple(arrows), tuple(relations))


def random_category(
    rng: random.Random,
    max_objects: int = 4,
    max_dim: int = 3,
    k: Optional[CoefficientField] = None,
) -> DGCategory:
    """A random quiver category with every hom of dimension ≤ max_dim."""
    k = k or CoefficientField()
    q = random_quiver(rng, max_objects)
    while True:
        c = from_quiver(q, k)
        oversized = [(a, b) for (a, b), basis in c.bases.items() if len(basis) > max_dim]
        if not oversized:
            logger.debug(f"random category {c!r}")
            return c
        a, b = oversized[0]
        longest = max(c.bases[(a, b)], key=lambda e: (e.name.count("*"), e.name))
        q = QuiverPresentation(q.vertices, q.arrows, q.relations + ({longest.name: 1},))
