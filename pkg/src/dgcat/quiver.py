"""
DGKIT QUIVERS

Graded quivers with homogeneous relations, and the DG category of paths
modulo the relation ideal (zero differential).

Paths are written in composition order joined by "*": for arrows
p: x → y and q: y → z the path "q*p" goes from x to z. Length-zero paths
are the identities "id_x".
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping, Optional

from src.config import get_settings
from src.contracts.errors import QuiverError, UnknownObjectError
from src.dgcat.category import BasisElement, DGCategory
from src.lattice.field import CoefficientField, FieldMatrix, SparseVector, add_scaled

logger = logging.getLogger(__name__)

Path = tuple[int, ...]  # arrow indices in travel order


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    degree: int = 0


@dataclass(frozen=True)
class QuiverPresentation:
    """
    Vertices, arrows and relations.

    Each relation maps path names to coefficients; all of its paths must be
    parallel with equal length and degree.
    """
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()
    relations: tuple[Mapping[str, object], ...] = field(default=())

    def __post_init__(self):
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError(f"duplicate arrow names in {names}")
        for a in self.arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise UnknownObjectError(f"arrow {a.name} uses an unknown vertex")

    def relabeled(self, mapping: Mapping[str, str]) -> "QuiverPresentation":
        """Rename vertices; arrows keep their names, identities in relations follow the vertices."""
        missing = [v for v in self.vertices if v not in mapping]
        if missing:
            raise UnknownObjectError(f"relabeling does not cover vertices {missing}")

        def rename(term: str) -> str:
            term = term.strip()
            if term.startswith("id_") and term[3:] in mapping:
                return f"id_{mapping[term[3:]]}"
            return term

        return QuiverPresentation(
            tuple(mapping[v] for v in self.vertices),
            tuple(Arrow(a.name, mapping[a.source], mapping[a.target], a.degree) for a in self.arrows),
            tuple({rename(t): c for t, c in r.items()} for r in self.relations),
        )


# ═══════════════════════════════════════════════════════════════════════════
# PATH CALCULUS
# ═══════════════════════════════════════════════════════════════════════════

class _PathAlgebra:
    """Path enumeration and normal forms modulo the relation ideal."""

    def __init__(self, q: QuiverPresentation, k: CoefficientField, cap: int):
        self.q, self.k, self.cap = q, k, cap
        self.arrow_index = {a.name: i for i, a in enumerate(q.arrows)}
        self.paths: dict[tuple[str, str, int], list[Path]] = {}
        self.relations = [self._parse_relation(r) for r in q.relations]
        self.reducers: dict[tuple[str, str, int], tuple[FieldMatrix, tuple[int, ...]]] = {}
        self.nilpotency = self._find_nilpotency()

    # ─── Paths ────────────────────────────────────────────────────────────────

    def source(self, p: Path, a: str) -> str:
        return self.q.arrows[p[0]].source if p else a

    def target(self, p: Path, a: str) -> str:
        return self.q.arrows[p[-1]].target if p else a

    def degree(self, p: Path) -> int:
        return sum(self.q.arrows[i].degree for i in p)

    def name(self, p: Path, a: str) -> str:
        if not p:
            return f"id_{a}"
        return "*".join(self.q.arrows[i].name for i in reversed(p))

    def paths_of_length(self, a: str, b: str, m: int) -> list[Path]:
        key = (a, b, m)
        if key not in self.paths:
            if m == 0:
                found = [()] if a == b else []
            else:
                found = [p for p in self._from(a, m) if self.target(p, a) == b]
            self.paths[key] = found
        return self.paths[key]

    def _from(self, a: str, m: int) -> list[Path]:
        frontier: list[Path] = [()]
        for _ in range(m):
            frontier = [
                p + (i,) for p in frontier for i, arrow in enumerate(self.q.arrows)
                if arrow.source == self.target(p, a)
            ]
        return frontier

    # ─── Relations ────────────────────────────────────────────────────────────

    def _parse_path(self, text: str) -> tuple[Path, Optional[str]]:
        text = text.strip()
        if text.startswith("id_"):
            vertex = text[3:]
            if vertex not in self.q.vertices:
                raise QuiverError(f"identity of unknown vertex in {text!r}")
            return (), vertex
        try:
            path = tuple(self.arrow_index[n.strip()] for n in reversed(text.split("*")))
        except KeyError as e:
            raise QuiverError(f"unknown arrow {e.args[0]!r} in path {text!r}") from e
        for x, y in zip(path, path[1:]):
            if self.q.arrows[x].target != self.q.arrows[y].source:
                raise QuiverError(f"path {text!r} does not compose")
        return path, None

    def _parse_relation(self, relation: Mapping[str, object]):
        terms = []
        shape = None
        for text, coeff in relation.items():
            path, vertex = self._parse_path(text)
            a = self.source(path, vertex)
            b = self.target(path, vertex)
            key = (a, b, len(path), self.degree(path))
            if shape is not None and key != shape:
                raise QuiverError(
                    f"relation {dict(relation)} is not homogeneous: {text!r} has "
                    f"(source, target, length, degree) = {key}, expected {shape}"
                )
            shape = key
            c = self.k.convert(coeff)
            if c:
                terms.append((path, c))
        if shape is None:
            raise QuiverError("empty relation")
        return shape, terms

    def ideal_rows(self, a: str, b: str, m: int) -> list[SparseVector]:
        """Spanning set of I ∩ paths(a → b, length m), in path coordinates."""
        index = {p: i for i, p in enumerate(self.paths_of_length(a, b, m))}
        rows = []
        for (s, t, length, _), terms in self.relations:
            if length > m:
                continue
            for i in range(m - length + 1):
                for p in self.paths_of_length(a, s, i):
                    for q in self.paths_of_length(t, b, m - length - i):
                        row: SparseVector = {}
                        for r, c in terms:
                            add_scaled(row, {index[p + r + q]: c}, self.k.one)
                        if row:
                            rows.append(row)
        return rows

    def reducer(self, a: str, b: str, m: int) -> tuple[FieldMatrix, tuple[int, ...]]:
        key = (a, b, m)
        if key not in self.reducers:
            n = len(self.paths_of_length(a, b, m))
            rows = self.ideal_rows(a, b, m)
            if rows and n:
                mat = FieldMatrix.from_sparse_columns(self.k, rows, n).transpose()
                self.reducers[key] = mat.rref()
            else:
                self.reducers[key] = (FieldMatrix.zeros(self.k, 0, n), ())
        return self.reducers[key]

    def _find_nilpotency(self) -> int:
        """Least m such that every path of length m lies in the ideal."""
        for m in range(self.cap + 1):
            if all(
                len(self.reducer(a, b, m)[1]) == len(self.paths_of_length(a, b, m))
                for a in self.q.vertices for b in self.q.vertices
            ):
                return m
        raise QuiverError(
            f"homs do not stabilize: paths of length {self.cap} survive the relations; "
            f"raise path_length_cap or add relations"
        )

    # ─── Normal forms ─────────────────────────────────────────────────────────

    def standard_paths(self, a: str, b: str, m: int) -> list[Path]:
        _, pivots = self.reducer(a, b, m)
        return [p for i, p in enumerate(self.paths_of_length(a, b, m)) if i not in pivots]

    def normal_form(self, p: Path, a: str, b: str) -> list[tuple[Path, object]]:
        """p modulo the ideal, as a combination of standard paths."""
        m = len(p)
        if m >= self.nilpotency:
            return []
        paths = self.paths_of_length(a, b, m)
        reduced, pivots = self.reducer(a, b, m)
        col = paths.index(p)
        if col not in pivots:
            return [(p, self.k.one)]
        row = reduced.data[pivots.index(col)]
        return [
            (paths[j], -row[j]) for j in range(len(paths))
            if j not in pivots and row[j]
        ]


# ═══════════════════════════════════════════════════════════════════════════
# CONSTRUCTION
# ═══════════════════════════════════════════════════════════════════════════

def from_quiver(q: QuiverPresentation, k: Optional[CoefficientField] = None,
                path_length_cap: Optional[int] = None) -> DGCategory:
    """
    Path category of q modulo relations, with zero differential.

    Hom(a, b) has the standard paths a → b as basis, shortest first, so the
    identity comes first in every endomorphism space.

    Raises:
        QuiverError: relations are malformed or homs stay infinite up to the cap
    """
    settings = get_settings()
    k = k or CoefficientField.parse(settings.default_field)
    cap = path_length_cap or settings.path_length_cap
    alg = _PathAlgebra(q, k, cap)

    bases: dict[tuple[str, str], list[BasisElement]] = {}
    position: dict[tuple[str, str], dict[Path, int]] = {}
    for a in q.vertices:
        for b in q.vertices:
            elements, where = [], {}
            for m in range(alg.nilpotency):
                for p in alg.standard_paths(a, b, m):
                    where[p] = len(elements)
                    elements.append(BasisElement(alg.name(p, a), alg.degree(p)))
            bases[(a, b)] = elements
            position[(a, b)] = where

    composition: dict = {}
    for a in q.vertices:
        for b in q.vertices:
            for c in q.vertices:
                table = {}
                for f_path, f in position[(a, b)].items():
                    for g_path, g in position[(b, c)].items():
                        value: SparseVector = {}
                        for p, coeff in alg.normal_form(f_path + g_path, a, c):
                            add_scaled(value, {position[(a, c)][p]: coeff}, k.one)
                        if value:
                            table[(g, f)] = value
                if table:
                    composition[(a, b, c)] = table

    identities = {v: position[(v, v)][()] for v in q.vertices}
    category = DGCategory.build(k, q.vertices, bases, {}, composition, identities)
    logger.info(
        f"quiver category: {len(q.vertices)} vertices, {len(q.arrows)} arrows, "
        f"paths vanish from length {alg.nilpotency}"
    )
    return category


def path_count(q: QuiverPresentation, a: str, b: str, max_length: int) -> int:
    """Number of paths a → b of length ≤ max_length, ignoring relations."""
    total = 0
    frontier = {(): a}
    for _ in range(max_length + 1):
        total += sum(1 for end in frontier.values() if end == b)
        frontier = {
            p + (i,): arrow.target for p, end in frontier.items()
            for i, arrow in enumerate(q.arrows) if arrow.source == end
        }
    return total


def is_acyclic_quiver(q: QuiverPresentation) -> bool:
    """True when the underlying graph has no oriented cycles."""
    adjacency = {v: {a.target for a in q.arrows if a.source == v} for v in q.vertices}
    state: dict[str, int] = {}

    def visit(v: str) -> bool:
        state[v] = 1
        for w in adjacency[v]:
            if state.get(w) == 1 or (w not in state and not visit(w)):
                return False
        state[v] = 2
        return True

    return all(v in state or visit(v) for v in q.vertices)
