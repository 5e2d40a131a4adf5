"""
DGKIT TRIPLE LOADER

Reads triple spec files: a base category with the objects to contract, or
explicit K_0 data, or both. For acyclic quiver categories without K_0 data
the K-triple is derived: representables form the bases, i* includes I, q*
kills it, and the Gram matrix of the quotient comes from the Drinfeld
quotient itself.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from src.contracts.errors import SpecSchemaError, UnknownObjectError
from src.contracts.schemas import CategorySpecFile, HypothesisSource, K0Data, Provenance, TripleSpecFile
from src.dgcat.category import DGCategory
from src.dgcat.quiver import Arrow, QuiverPresentation, is_acyclic_quiver
from src.drinfeld.quotient import QuotientCategory, drinfeld_quotient, gram_from_quotient
from src.ingest.parser import build_category, load_json, read_text, validate_model
from src.ktheory.euler_lattice import EulerLattice, gram_from_category
from src.ktheory.verifier import KTriple
from src.lattice.intmatrix import IntMatrix
from src.lattice.sublattice import Sublattice
from src.perfect.search import perfectness_witness_for_inclusion
from src.perfect.twisted import TwistedComplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LoadedTriple:
    spec: TripleSpecFile
    category: Optional[DGCategory]
    acyclic_quiver: bool
    depth: int

    @property
    def contract(self) -> list[str]:
        return list(self.spec.contract)

    def expected_pairs(self) -> dict[tuple[str, str], int]:
        pairs = {}
        for key, value in self.spec.expected_h0.items():
            parts = key.split("->")
            if len(parts) != 2:
                raise SpecSchemaError(f"pair {key!r} must be 'a->b'", "expected_h0")
            pairs[(parts[0], parts[1])] = value
        return pairs

    def quotient(self) -> QuotientCategory:
        if self.category is None:
            raise SpecSchemaError("this triple has no category to take a quotient of", "category")
        return drinfeld_quotient(self.category, self.contract, self.depth)


def parse_triple(text: str, base_dir: Path = Path("."), depth: Optional[int] = None,
                 field_label: Optional[str] = None) -> LoadedTriple:
    """
    Parse a triple spec. category_path is resolved against base_dir.

    Raises:
        SpecSyntaxError, SpecSchemaError: malformed file
        UnknownObjectError: a contracted label is not an object
    """
    spec = validate_model(TripleSpecFile, load_json(text))
    category, acyclic = None, False
    if spec.has_category:
        inner = spec.category
        if inner is None:
            inner = validate_model(CategorySpecFile, load_json(read_text(base_dir / spec.category_path)))
        category = build_category(inner, field_label)
        if inner.quiver is not None:
            q = QuiverPresentation(
                tuple(inner.quiver.vertices),
                tuple(Arrow(a.name, a.source, a.target, a.degree) for a in inner.quiver.arrows),
            )
            acyclic = is_acyclic_quiver(q)
        unknown = [c for c in spec.contract if c not in category.objects]
        if unknown:
            raise UnknownObjectError(f"contracted objects {unknown} are not in the category")
    return LoadedTriple(spec, category, acyclic, depth if depth is not None else spec.depth)


def load_triple(path: str | Path, depth: Optional[int] = None,
                field_label: Optional[str] = None) -> LoadedTriple:
    path = Path(path)
    return parse_triple(read_text(path), path.parent, depth, field_label)


# ═══════════════════════════════════════════════════════════════════════════
# K-TRIPLES
# ═══════════════════════════════════════════════════════════════════════════

def _rows(m: list[list[int]], cols: int) -> IntMatrix:
    return IntMatrix.from_rows(m, cols=cols)


def _from_k0(k0: K0Data) -> tuple[EulerLattice, EulerLattice, EulerLattice, IntMatrix, IntMatrix, Sublattice]:
    lat_i = EulerLattice.from_rows(k0.gram_I, k0.serre_I)
    lat_a = EulerLattice.from_rows(k0.gram_A, k0.serre_A)
    lat_q = EulerLattice.from_rows(k0.gram_Q, k0.serre_Q)
    return (
        lat_i, lat_a, lat_q,
        _rows(k0.i_star, lat_i.rank),
        _rows(k0.q_star, lat_a.rank),
        Sublattice.from_generators(lat_q.rank, k0.quotient_relations),
    )


def _derive(t: LoadedTriple) -> tuple[EulerLattice, EulerLattice, EulerLattice, IntMatrix, IntMatrix, Sublattice]:
    a_cat = t.category
    contract = set(t.contract)
    objs = list(a_cat.objects)
    kept = [x for x in objs if x not in contract]
    inner = [x for x in objs if x in contract]

    reps = {x: TwistedComplex.representable(a_cat, x) for x in objs}
    lat_a = gram_from_category(a_cat, [reps[x] for x in objs])
    lat_i = gram_from_category(a_cat, [reps[x] for x in inner])
    q_gram = gram_from_quotient(t.quotient(), kept)
    lat_q = EulerLattice(len(kept), IntMatrix.from_rows(q_gram, cols=len(kept)),
                         provenance=Provenance.COMPUTED)

    i_star = IntMatrix.from_columns(
        [[1 if y == x else 0 for y in objs] for x in inner], len(objs)
    )
    q_star = IntMatrix.from_rows(
        [[1 if y == x else 0 for y in objs] for x in kept], cols=len(objs)
    )
    logger.info(f"derived K-triple: ranks {len(inner)}, {len(objs)}, {len(kept)}")
    return lat_i, lat_a, lat_q, i_star, q_star, Sublattice.zero(len(kept))


def build_k_triple(t: LoadedTriple, witness: bool = True) -> KTriple:
    """
    Explicit K_0 data wins; otherwise derive it from an acyclic quiver.

    The compactness hypothesis is ASSERTED when flagged, otherwise WITNESSED
    when the bounded perfectness search resolves every restricted
    representable, otherwise ABSENT.
    """
    spec = t.spec
    if spec.k0 is not None:
        data = _from_k0(spec.k0)
    elif t.category is not None and t.acyclic_quiver:
        data = _derive(t)
    else:
        raise SpecSchemaError("k0 data is required unless the category is an acyclic quiver", "k0")

    thick = HypothesisSource.ASSERTED if spec.flags.thick else HypothesisSource.ABSENT
    compacts = HypothesisSource.ASSERTED if spec.flags.q_preserves_compacts else HypothesisSource.ABSENT
    witnesses = {}
    if compacts == HypothesisSource.ABSENT and witness and t.category is not None:
        results = perfectness_witness_for_inclusion(t.category, t.contract)
        witnesses = {b: r.status.value for b, r in results.items()}
        if all(r.perfect and r.verified for r in results.values()):
            compacts = HypothesisSource.WITNESSED

    lat_i, lat_a, lat_q, i_star, q_star, relations = data
    return KTriple(lat_i, lat_a, lat_q, i_star, q_star, relations, thick, compacts, witnesses)
