"""
DGKIT INGEST — Spec files in, validated categories and K-triples out, reports back.
"""

from src.ingest.parser import (
    load_json,
    validate_model,
    read_text,
    parse_field,
    build_category,
    parse_category,
    load_category,
)
from src.ingest.serializer import category_to_dict, serialize_category
from src.ingest.triple import LoadedTriple, parse_triple, load_triple, build_k_triple
from src.ingest.reports import Report, format_matrix, format_vectors

__all__ = [
    "load_json",
    "validate_model",
    "read_text",
    "parse_field",
    "build_category",
    "parse_category",
    "load_category",
    "category_to_dict",
    "serialize_category",
    "LoadedTriple",
    "parse_triple",
    "load_triple",
    "build_k_triple",
    "Report",
    "format_matrix",
    "format_vectors",
]
