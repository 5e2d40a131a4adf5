"""
DGKIT INGEST TESTS

Spec file parsing with its error reporting, canonical serialization,
triple loading and report rendering.
"""

import json

import pytest

from src.contracts.errors import (
    DGAxiomError,
    SpecSchemaError,
    SpecSyntaxError,
    UnknownObjectError,
)
from src.contracts.schemas import HypothesisSource, SequenceRoute
from src.ingest.parser import load_category, parse_category
from src.ingest.reports import Report, format_matrix, format_vectors
from src.ingest.serializer import serialize_category
from src.ingest.triple import build_k_triple, load_triple, parse_triple


# ═══════════════════════════════════════════════════════════════════════════
# CATEGORY PARSER
# ═══════════════════════════════════════════════════════════════════════════

class TestParser:
    """Test category spec files and their errors."""

    def test_malformed_json_names_position(self):
        """Test a syntax error reports line and column."""
        with pytest.raises(SpecSyntaxError) as excinfo:
            parse_category('{\n  "objects": ["x",]\n}')
        assert excinfo.value.line == 2
        assert excinfo.value.column > 1

    def test_homs_and_quiver_together(self):
        """Test a file giving both sources is refused."""
        text = json.dumps({
            "objects": ["x"],
            "homs": {"x->x": [{"name": "id_x", "degree": 0}]},
            "quiver": {"vertices": ["x"]},
        })
        with pytest.raises(SpecSchemaError):
            parse_category(text)

    def test_unknown_basis_element(self):
        """Test a differential naming an unknown element."""
        text = json.dumps({
            "objects": ["x"],
            "homs": {"x->x": [{"name": "id_x", "degree": 0}]},
            "differential": {"id_x": {"ghost": 1}},
        })
        with pytest.raises(SpecSchemaError) as excinfo:
            parse_category(text)
        assert excinfo.value.rule == "differential"

    def test_unknown_object_in_hom_key(self):
        """Test a hom key with an object not in the list."""
        text = json.dumps({
            "objects": ["x"],
            "homs": {"x->y": [{"name": "f", "degree": 0}]},
        })
        with pytest.raises(SpecSchemaError):
            parse_category(text)

    def test_bad_field(self):
        """Test a field label outside Q and Fp."""
        with pytest.raises(SpecSchemaError):
            parse_category(json.dumps({"field": "R", "quiver": {"vertices": ["x"]}}))

    def test_field_override(self, fixtures_dir):
        """Test --field style overrides win over the file."""
        c = load_category(fixtures_dir / "a2.json", field_label="Fp:3")
        assert c.field.label == "Fp:3"

    def test_axiom_failure_carries_report(self, fixtures_dir):
        """Test the mutant Koszul file fails with the full report attached."""
        with pytest.raises(DGAxiomError) as excinfo:
            load_category(fixtures_dir / "koszul_mutant.json")
        assert not excinfo.value.report.ok
        assert "leibniz" in str(excinfo.value)

    def test_missing_file(self, tmp_path):
        """Test an unreadable path becomes a schema error naming the input."""
        with pytest.raises(SpecSchemaError) as excinfo:
            load_category(tmp_path / "absent.json")
        assert excinfo.value.rule == "input"


# ═══════════════════════════════════════════════════════════════════════════
# SERIALIZER
# ═══════════════════════════════════════════════════════════════════════════

class TestSerializer:
    """Test canonical category output."""

    def test_quiver_category_reparses(self, a2):
        """Test the explicit form of A2 parses back to A2."""
        assert parse_category(serialize_category(a2)) == a2

    def test_koszul_reparses(self, koszul):
        """Test signs and degrees survive serialization."""
        assert parse_category(serialize_category(koszul)) == koszul

    def test_output_is_stable(self, koszul):
        """Test serializing twice gives identical text."""
        assert serialize_category(koszul) == serialize_category(parse_category(serialize_category(koszul)))


# ═══════════════════════════════════════════════════════════════════════════
# TRIPLES
# ═══════════════════════════════════════════════════════════════════════════

class TestTriples:
    """Test triple files and K-triple construction."""

    def test_load_with_category_path(self, a2_triple, a2):
        """Test the referenced category is loaded relative to the triple."""
        assert a2_triple.category == a2
        assert a2_triple.contract == ["x"]
        assert a2_triple.acyclic_quiver
        assert a2_triple.expected_pairs()[("y", "y")] == 1

    def test_depth_override(self, fixtures_dir):
        """Test an explicit depth wins over the file."""
        t = load_triple(fixtures_dir / "a2_triple.json", depth=5)
        assert t.depth == 5

    def test_derived_k_triple(self, a2_triple):
        """Test A2 ⊃ ⟨x⟩ derives lattices and a witnessed compactness flag."""
        k = build_k_triple(a2_triple)
        assert k.lattice_a.gram.to_rows() == [[1, 1], [0, 1]]
        assert k.lattice_i.gram.to_rows() == [[1]]
        assert k.lattice_q.gram.to_rows() == [[1]]
        assert k.q_preserves_compacts == HypothesisSource.WITNESSED
        assert k.hypotheses().route == SequenceRoute.THEOREM

    def test_no_witness_search(self, a2_triple):
        """Test skipping the search leaves the compactness flag absent."""
        k = build_k_triple(a2_triple, witness=False)
        assert k.q_preserves_compacts == HypothesisSource.ABSENT
        assert k.hypotheses().route == SequenceRoute.COROLLARY

    def test_explicit_k0(self, fixtures_dir):
        """Test k0 data is used as given."""
        k = build_k_triple(load_triple(fixtures_dir / "corollary_triple.json"))
        assert k.i_star.to_rows() == [[1], [0]]
        assert k.thick == HypothesisSource.ASSERTED

    def test_unknown_contracted_object(self, fixtures_dir):
        """Test contracting an object the category lacks."""
        text = json.dumps({"category_path": "a2.json", "contract": ["w"]})
        with pytest.raises(UnknownObjectError):
            parse_triple(text, fixtures_dir)

    def test_k0_shape_error(self):
        """Test i_star of the wrong shape is a schema error."""
        text = json.dumps({"k0": {
            "gram_I": [[1]], "gram_A": [[1]], "gram_Q": [[1]],
            "i_star": [[1, 0]], "q_star": [[1]],
        }})
        with pytest.raises(SpecSchemaError):
            parse_triple(text)

    def test_triple_needs_a_source(self):
        """Test an empty triple is refused."""
        with pytest.raises(SpecSchemaError):
            parse_triple("{}")

    def test_k0_needed_for_explicit_categories(self, fixtures_dir):
        """Test a non-quiver category without k0 data cannot derive a K-triple."""
        text = json.dumps({"category_path": "koszul.json", "contract": ["o"]})
        with pytest.raises(SpecSchemaError):
            build_k_triple(parse_triple(text, fixtures_dir))


# ═══════════════════════════════════════════════════════════════════════════
# REPORTS
# ═══════════════════════════════════════════════════════════════════════════

class TestReports:
    """Test report rendering and digests."""

    def test_header_and_verdict(self):
        """Test the banner, convention line and verdict mark."""
        r = Report("snf", "SMITH NORMAL FORM", "m.json")
        r.verdict(True, "U·M·V = D")
        text = r.text()
        assert "DGKIT — SMITH NORMAL FORM" in text
        assert "convention:" in text
        assert "✓ U·M·V = D" in text
        assert r.payload["passed"] is True

    def test_digest_is_stable(self):
        """Test equal payloads give equal digests whatever the insertion order."""
        a = Report("numk", "N")
        a.record("x", 1)
        a.record("y", [1, 2])
        b = Report("numk", "N")
        b.record("y", [1, 2])
        b.record("x", 1)
        assert a.digest() == b.digest()
        assert json.loads(a.to_json())["digest"] == a.digest()

    def test_digest_changes_with_payload(self):
        """Test a different payload gives a different digest."""
        a = Report("numk", "N")
        b = Report("numk", "N")
        b.record("x", 1)
        assert a.digest() != b.digest()

    def test_format_helpers(self):
        """Test matrices and vector spans print compactly."""
        assert format_vectors([]) == "0"
        assert "(1, -1)" in format_vectors([[1, -1]])
        assert format_matrix([])[0].strip().startswith("[]")
