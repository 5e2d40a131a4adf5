"""
DGKIT CATEGORY PARSER

Reads category spec files (explicit bases or a quiver) into validated
DGCategory objects. Errors name the line and column for malformed JSON, the
violated rule for schema problems, and the offending basis elements for
DG-axiom failures.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, ValidationError

from src.contracts.errors import DGAxiomError, QuiverError, SpecSchemaError, SpecSyntaxError
from src.contracts.schemas import CategorySpecFile
from src.dgcat.category import BasisElement, DGCategory
from src.dgcat.quiver import Arrow, QuiverPresentation, from_quiver
from src.lattice.field import CoefficientField, SparseVector

logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════════════════════
# JSON AND SCHEMA
# ═══════════════════════════════════════════════════════════════════════════

def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecSyntaxError(e.msg, e.lineno, e.colno) from e


def validate_model(model: type[BaseModel], data: Any) -> Any:
    """model.model_validate with the first error turned into SpecSchemaError."""
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        rule = ".".join(str(p) for p in first["loc"]) or model.__name__
        raise SpecSchemaError(first["msg"], rule) from e


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SpecSchemaError(f"cannot read {path}: {e.strerror}", "input") from e


def parse_field(label: str) -> CoefficientField:
    try:
        return CoefficientField.parse(label)
    except ValueError as e:
        raise SpecSchemaError(str(e), "field") from e


def _coefficient(k: CoefficientField, value: Any, rule: str):
    try:
        return k.convert(value)
    except (TypeError, ValueError, ZeroDivisionError, ArithmeticError) as e:
        raise SpecSchemaError(f"bad coefficient {value!r}", rule) from e


def _pair(key: str, objects: list[str]) -> tuple[str, str]:
    parts = key.split("->")
    if len(parts) != 2 or not all(p in objects for p in parts):
        raise SpecSchemaError(f"hom key {key!r} must be 'a->b' with known objects", "homs")
    return parts[0], parts[1]


# ═══════════════════════════════════════════════════════════════════════════
# BUILDERS
# ═══════════════════════════════════════════════════════════════════════════

def _build_explicit(spec: CategorySpecFile, k: CoefficientField) -> DGCategory:
    objects = list(spec.objects or [])
    if len(set(objects)) != len(objects):
        raise SpecSchemaError(f"duplicate objects in {objects}", "objects")

    bases: dict[tuple[str, str], list[BasisElement]] = {}
    where: dict[str, tuple[str, str, int]] = {}
    for key, elements in (spec.homs or {}).items():
        a, b = _pair(key, objects)
        for e in elements:
            if e.name in where:
                raise SpecSchemaError(f"basis name {e.name!r} used twice", "homs")
            where[e.name] = (a, b, len(bases.setdefault((a, b), [])))
            bases[(a, b)].append(BasisElement(e.name, e.degree))

    def locate(name: str, rule: str) -> tuple[str, str, int]:
        if name not in where:
            raise SpecSchemaError(f"unknown basis element {name!r}", rule)
        return where[name]

    identities = {}
    for a in objects:
        name = spec.identities.get(a, f"id_{a}")
        src, dst, idx = locate(name, "identities")
        if (src, dst) != (a, a):
            raise SpecSchemaError(f"identity {name!r} of {a} is not an endomorphism", "identities")
        identities[a] = idx

    differential: dict[tuple[str, str], dict[int, SparseVector]] = {}
    for name, image in spec.differential.items():
        a, b, idx = locate(name, "differential")
        vec: SparseVector = {}
        for term, coeff in image.items():
            ta, tb, t = locate(term, "differential")
            if (ta, tb) != (a, b):
                raise SpecSchemaError(f"d({name}) contains {term!r} from another hom", "differential")
            c = _coefficient(k, coeff, "differential")
            if c:
                vec[t] = c
        differential.setdefault((a, b), {})[idx] = vec

    composition: dict = {}
    for entry in spec.composition:
        b, c, g = locate(entry.left, "composition")
        a, b2, f = locate(entry.right, "composition")
        if b != b2:
            raise SpecSchemaError(f"{entry.left} ∘ {entry.right} does not compose", "composition")
        vec = {}
        for term, coeff in entry.result.items():
            ta, tc, t = locate(term, "composition")
            if (ta, tc) != (a, c):
                raise SpecSchemaError(
                    f"{entry.left} ∘ {entry.right} cannot contain {term!r}", "composition"
                )
            value = _coefficient(k, coeff, "composition")
            if value:
                vec[t] = value
        composition.setdefault((a, b, c), {})[(g, f)] = vec

    return DGCategory.build(k, objects, bases, differential, composition, identities)


def _build_quiver(spec: CategorySpecFile, k: CoefficientField) -> DGCategory:
    qs = spec.quiver
    try:
        q = QuiverPresentation(
            tuple(qs.vertices),
            tuple(Arrow(a.name, a.source, a.target, a.degree) for a in qs.arrows),
            tuple(qs.relations),
        )
    except QuiverError as e:
        raise SpecSchemaError(str(e), "quiver") from e
    return from_quiver(q, k, qs.path_length_cap)


def build_category(spec: CategorySpecFile, field_label: Optional[str] = None) -> DGCategory:
    """
    Turn a schema-valid spec into a validated DGCategory.

    Raises:
        SpecSchemaError: references to unknown objects or elements
        QuiverError: infinite homs or inhomogeneous relations
        DGAxiomError: the structure constants violate the DG axioms
    """
    k = parse_field(field_label or spec.field)
    category = _build_quiver(spec, k) if spec.quiver is not None else _build_explicit(spec, k)

    report = category.validate()
    if not report.ok:
        first = report.violations[0]
        raise DGAxiomError(
            f"{first.axiom.value} fails for {', '.join(first.elements)}"
            + (f": {first.detail}" if first.detail else "")
            + (f" ({len(report.violations)} violations)" if len(report.violations) > 1 else ""),
            report,
        )
    logger.info(f"parsed {category!r}")
    return category


def parse_category(text: str, field_label: Optional[str] = None) -> DGCategory:
    """Parse a category spec from JSON text."""
    spec = validate_model(CategorySpecFile, load_json(text))
    return build_category(spec, field_label)


def load_category(path: str | Path, field_label: Optional[str] = None) -> DGCategory:
    return parse_category(read_text(path), field_label)
