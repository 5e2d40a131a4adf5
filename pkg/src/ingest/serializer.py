"""
DGKIT CATEGORY SERIALIZER

Writes a DGCategory in the explicit homs/composition format accepted by
parse_category. Every structure constant is written, unit laws included,
so parsing the output reproduces the category exactly.
"""

from __future__ import annotations

import json
from typing import Any

from src.dgcat.category import DGCategory
from src.lattice.field import CoefficientField


def _coefficient(k: CoefficientField, x: Any) -> int | str:
    text = k.to_string(x)
    return int(text) if "/" not in text else text


def category_to_dict(c: DGCategory) -> dict:
    k = c.field
    names = {(a, b): [e.name for e in c.basis(a, b)] for a in c.objects for b in c.objects}
    homs = {
        f"{a}->{b}": [{"name": e.name, "degree": e.degree} for e in c.basis(a, b)]
        for a in c.objects for b in c.objects if c.basis(a, b)
    }
    identities = {a: names[(a, a)][c.identity_index[a]] for a in c.objects}

    differential = {}
    for (a, b), table in c.differential_table.items():
        for j in sorted(table):
            differential[names[(a, b)][j]] = {
                names[(a, b)][t]: _coefficient(k, v) for t, v in sorted(table[j].items())
            }

    composition = []
    for a in c.objects:
        for b in c.objects:
            for cc in c.objects:
                table = c.composition_table.get((a, b, cc), {})
                for (g, f) in sorted(table):
                    composition.append({
                        "left": names[(b, cc)][g],
                        "right": names[(a, b)][f],
                        "result": {
                            names[(a, cc)][t]: _coefficient(k, v)
                            for t, v in sorted(table[(g, f)].items())
                        },
                    })

    return {
        "field": k.label,
        "objects": list(c.objects),
        "homs": homs,
        "identities": identities,
        "differential": differential,
        "composition": composition,
    }


def serialize_category(c: DGCategory) -> str:
    """Canonical JSON text for c."""
    return json.dumps(category_to_dict(c), indent=2, ensure_ascii=False) + "\n"
