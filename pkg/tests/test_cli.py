"""
DGKIT CLI TESTS

Each subcommand end to end through main(), checking exit codes, key report
lines and the JSON output.
"""

import json

import pytest

from src.contracts.errors import SpecSchemaError
from src.main import main, parse_generators, parse_pairs


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def fixture(fixtures_dir):
    return lambda name: str(fixtures_dir / name)


# ═══════════════════════════════════════════════════════════════════════════
# ARGUMENT HELPERS
# ═══════════════════════════════════════════════════════════════════════════

class TestArguments:
    """Test pair and generator parsing."""

    def test_pairs(self):
        """Test 'x->y, y->y' splits into pairs."""
        assert parse_pairs("x->y, y->y") == [("x", "y"), ("y", "y")]

    def test_bad_pair(self):
        """Test a pair without an arrow is refused."""
        with pytest.raises(SpecSchemaError):
            parse_pairs("x-y")

    def test_generators_with_shift(self, a2):
        """Test 'x[1],y' gives a shifted representable."""
        labels, gens = parse_generators(a2, "x[1],y")
        assert labels == ["x[1]", "y"]
        assert gens[0].entries == (("x", 1),)

    def test_default_generators(self, a2):
        """Test all objects are used when none are given."""
        labels, _ = parse_generators(a2, None)
        assert labels == ["x", "y"]


# ═══════════════════════════════════════════════════════════════════════════
# COMMANDS
# ═══════════════════════════════════════════════════════════════════════════

class TestCommands:
    """Test every subcommand on the bundled fixtures."""

    def test_chi_gram(self, capsys, fixture):
        """Test the A2 Gram matrix."""
        code, out, _ = run(capsys, "chi-gram", "-i", fixture("a2.json"), "--json", "-")
        assert code == 0
        assert json.loads(out)["gram"] == [[1, 1], [0, 1]]

    def test_chi_gram_shifted(self, capsys, fixture):
        """Test a shifted generator flips signs."""
        code, out, _ = run(capsys, "chi-gram", "-i", fixture("a2.json"), "-g", "x[1],y", "--json", "-")
        assert code == 0
        assert json.loads(out)["gram"] == [[1, -1], [0, 1]]

    def test_numk_degenerate(self, capsys, fixture):
        """Test N = Z for the degenerate pairing."""
        code, out, _ = run(capsys, "numk", "-i", fixture("degenerate_lattice.json"))
        assert code == 0
        assert "N ≅ Z^1" in out

    def test_numk_kernel_mismatch(self, capsys, fixture):
        """Test different kernels fail the check."""
        code, out, _ = run(capsys, "numk", "-i", fixture("kernel_mismatch_lattice.json"))
        assert code == 1
        assert "✗" in out

    def test_quotient(self, capsys, fixture):
        """Test A2/⟨x⟩ matches its expected H^0 dimensions."""
        code, out, _ = run(capsys, "quotient", "-i", fixture("a2_triple.json"), "--json", "-")
        assert code == 0
        payload = json.loads(out)
        assert payload["h0"]["y->y"] == 1
        assert payload["trust"]["y->y"] == "all degrees"
        assert payload["violations"] == 0

    def test_quotient_empty_contraction(self, capsys, fixture):
        """Test contracting nothing leaves A2's H^0 unchanged."""
        code, out, _ = run(capsys, "quotient", "-i", fixture("empty_contraction_triple.json"), "--json", "-")
        assert code == 0
        payload = json.loads(out)
        assert payload["h0"]["x->y"] == 1
        assert payload["h0"]["y->x"] == 0

    def test_chi_gram_point(self, capsys, fixture):
        """Test the one-object category has Gram matrix [[1]]."""
        code, out, _ = run(capsys, "chi-gram", "-i", fixture("k.json"), "--json", "-")
        assert code == 0
        assert json.loads(out)["gram"] == [[1]]

    def test_quotient_unknown_pair(self, capsys, fixture):
        """Test an unknown object in --pairs is rejected."""
        code, _, err = run(capsys, "quotient", "-i", fixture("a2_triple.json"), "-p", "x->w")
        assert code == 2
        assert "UnknownObjectError" in err

    def test_verify_sequence_derived(self, capsys, fixture):
        """Test the derived A2 triple verifies by the theorem route."""
        code, out, _ = run(capsys, "verify-sequence", "-i", fixture("a2_triple.json"))
        assert code == 0
        assert "sequences verified (theorem)" in out

    def test_verify_sequence_corollary(self, capsys, fixture):
        """Test explicit K_0 data verifies by the corollary route."""
        code, out, _ = run(capsys, "verify-sequence", "-i", fixture("corollary_triple.json"))
        assert code == 0
        assert "corollary" in out

    def test_verify_sequence_torsion(self, capsys, fixture):
        """Test torsion in coker i* leaves the numerical sequence unbacked."""
        code, out, _ = run(capsys, "verify-sequence", "-i", fixture("torsion_triple.json"), "--json", "-")
        assert code == 1
        payload = json.loads(out)
        assert payload["numerical"]["route"] == "hypotheses_unmet"
        assert payload["passed"] is False

    def test_verify_serre_supplied(self, capsys, fixture):
        """Test a correct supplied Serre matrix."""
        code, _, _ = run(capsys, "verify-serre", "-i", fixture("a2_lattice.json"))
        assert code == 0

    def test_verify_serre_wrong(self, capsys, fixture):
        """Test a wrong Serre matrix is rejected with its residual."""
        code, out, _ = run(capsys, "verify-serre", "-i", fixture("bad_serre_lattice.json"), "--json", "-")
        assert code == 1
        assert json.loads(out)["residual"] == [[0, -1], [1, 0]]

    def test_verify_serre_from_category(self, capsys, fixture):
        """Test S is computed from the A2 category."""
        code, out, _ = run(capsys, "verify-serre", "-i", fixture("a2.json"), "--json", "-")
        assert code == 0
        assert json.loads(out)["serre"] == [[0, -1], [1, 1]]

    def test_snf(self, capsys, fixture):
        """Test invariant factors 2, 6, 12."""
        code, out, _ = run(capsys, "snf", "-i", fixture("snf_matrix.json"), "--json", "-")
        assert code == 0
        assert json.loads(out)["invariant_factors"] == [2, 6, 12]

    @pytest.mark.slow
    def test_fuzz(self, capsys):
        """Test a few random categories and their quotients validate."""
        code, out, _ = run(capsys, "fuzz", "--seed", "3", "--count", "3", "--depth", "2")
        assert code == 0
        assert "3 instances valid" in out


# ═══════════════════════════════════════════════════════════════════════════
# ERRORS AND OUTPUT
# ═══════════════════════════════════════════════════════════════════════════

class TestErrorsAndOutput:
    """Test exit codes for rejected inputs and the output channels."""

    def test_missing_file(self, capsys, tmp_path):
        """Test a missing input exits 2."""
        code, _, err = run(capsys, "chi-gram", "-i", str(tmp_path / "none.json"))
        assert code == 2
        assert "ERROR: SpecSchemaError" in err

    def test_axiom_failure(self, capsys, fixture):
        """Test d² ≠ 0 exits 2 naming the error."""
        code, _, err = run(capsys, "chi-gram", "-i", fixture("bad_dsquared.json"))
        assert code == 2
        assert "ERROR: DGAxiomError" in err

    @pytest.mark.parametrize("label", ["Fp:4", "Fp:x", "R"])
    def test_fuzz_bad_field(self, capsys, label):
        """Test a bad --field for fuzz exits 2 with an ERROR line."""
        code, _, err = run(capsys, "fuzz", "--field", label, "--count", "1")
        assert code == 2
        assert "ERROR: SpecSchemaError" in err

    def test_infinite_quiver(self, capsys, fixture):
        """Test a free loop exits 2."""
        code, _, err = run(capsys, "chi-gram", "-i", fixture("loop.json"))
        assert code == 2
        assert "QuiverError" in err

    def test_json_has_digest(self, capsys, fixture):
        """Test JSON output carries the command and a digest."""
        code, out, _ = run(capsys, "snf", "-i", fixture("snf_matrix.json"), "--json", "-")
        payload = json.loads(out)
        assert payload["command"] == "snf"
        assert len(payload["digest"]) == 64

    def test_json_to_file(self, capsys, fixture, tmp_path):
        """Test --json PATH writes JSON there and text to stdout."""
        target = tmp_path / "report.json"
        code, out, _ = run(capsys, "snf", "-i", fixture("snf_matrix.json"), "--json", str(target))
        assert code == 0
        assert "DGKIT — SMITH NORMAL FORM" in out
        assert json.loads(target.read_text())["passed"] is True

    def test_output_is_deterministic(self, capsys, fixture):
        """Test two runs print identical reports."""
        _, first, _ = run(capsys, "verify-sequence", "-i", fixture("a2_triple.json"))
        _, second, _ = run(capsys, "verify-sequence", "-i", fixture("a2_triple.json"))
        assert first == second
