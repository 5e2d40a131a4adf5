"""
DGKIT MAIN ENTRY POINT

Command-line interface for the DG-category toolkit.

Usage:
    dgkit chi-gram --input data/fixtures/a2.json --generators x,y
    dgkit numk --input data/fixtures/degenerate_lattice.json
    dgkit quotient --input data/fixtures/a2_triple.json --depth 3
    dgkit verify-sequence --input data/fixtures/a2_triple.json
    dgkit verify-serre --input data/fixtures/a2.json
    dgkit snf --input data/fixtures/snf_matrix.json
    dgkit fuzz --seed 0 --count 20

Exit codes: 0 success, 1 a verification failed, 2 the input was rejected.
"""

from __future__ import annotations

import argparse
import logging
import random
import re
import sys
from pathlib import Path
from typing import Callable, Optional

from rich.console import Console
from rich.logging import RichHandler

from src.config import get_settings
from src.contracts.errors import DGKitError, KernelMismatchError, SpecSchemaError, UnknownObjectError
from src.contracts.schemas import CategorySpecFile, LatticeSpecFile, MatrixSpecFile
from src.dgcat.category import DGCategory
from src.dgcat.random_gen import random_category
from src.drinfeld.quotient import drinfeld_quotient
from src.drinfeld.verdier import compare_h0
from src.ingest.parser import build_category, load_json, parse_field, read_text, validate_model
from src.ingest.reports import Report, format_vectors, mark
from src.ingest.triple import build_k_triple, load_triple
from src.ktheory.euler_lattice import (
    EulerLattice,
    chi_kernels,
    gram_from_category,
    numerical_group,
    serre_from_gram,
)
from src.ktheory.verifier import verify_k0_sequence, verify_numerical_sequence
from src.lattice.intmatrix import IntMatrix
from src.lattice.normal_forms import smith_normal_form
from src.lattice.presentation import presentation_from_factors
from src.perfect.homs import cohomology_dimensions
from src.perfect.twisted import TwistedComplex

logger = logging.getLogger("dgkit")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

GENERATOR = re.compile(r"^\s*([^\[\],\s]+)\s*(?:\[\s*(-?\d+)\s*\])?\s*$")


# ═══════════════════════════════════════════════════════════════════════════
# ARGUMENTS
# ═══════════════════════════════════════════════════════════════════════════

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dgkit",
        description="DGKIT: DG categories, Drinfeld quotients and numerical K-theory",
    )
    parser.add_argument("--log-level", default=None, help="Logging level (default: from DGKIT_LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str, needs_input: bool = True) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        if needs_input:
            sub.add_argument("--input", "-i", required=True, help="Spec file (JSON)")
        sub.add_argument(
            "--json", nargs="?", const="-", default=None, metavar="PATH",
            help="Write the JSON report to PATH, or to stdout instead of the text report",
        )
        sub.add_argument("--field", default=None, help="Coefficient field: Q or Fp:<prime>")
        return sub

    chi_gram = command("chi-gram", "Gram matrix of the Euler pairing on a list of generators")
    chi_gram.add_argument("--generators", "-g", default=None, help="Comma list like x,y[1] (default: all objects)")

    numk = command("numk", "Kernels of χ and the numerical Grothendieck group")
    numk.add_argument("--generators", "-g", default=None, help="Comma list like x,y[1] (default: all objects)")

    quotient = command("quotient", "Materialize a Drinfeld quotient and report H^0 of its homs")
    quotient.add_argument("--depth", "-d", type=int, default=None, help="Maximum number of ξ factors")
    quotient.add_argument("--pairs", "-p", default=None, help="Comma list like x->y,y->y")

    sequence = command("verify-sequence", "Check the K_0 and numerical exact sequences of a triple")
    sequence.add_argument("--depth", "-d", type=int, default=None, help="Depth for derived quotient data")
    sequence.add_argument("--no-witness", action="store_true", help="Skip the perfectness search")

    serre = command("verify-serre", "Check a Serre matrix against the Gram matrix")
    serre.add_argument("--generators", "-g", default=None, help="Comma list like x,y[1] (default: all objects)")

    command("snf", "Smith normal form of an integer matrix")

    fuzz = command("fuzz", "Validate random quiver categories and their quotients", needs_input=False)
    fuzz.add_argument("--seed", "-s", type=int, default=None, help="Base seed")
    fuzz.add_argument("--count", "-n", type=int, default=20, help="Number of random categories")
    fuzz.add_argument("--depth", "-d", type=int, default=None, help="Quotient depth")
    return parser


def configure_logging(level: Optional[str]) -> None:
    level = (level or get_settings().log_level).upper()
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False, markup=False)],
        force=True,
    )


def parse_pairs(text: str) -> list[tuple[str, str]]:
    pairs = []
    for chunk in text.split(","):
        parts = [p.strip() for p in chunk.split("->")]
        if len(parts) != 2 or not all(parts):
            raise SpecSchemaError(f"pair {chunk.strip()!r} must be 'a->b'", "--pairs")
        pairs.append((parts[0], parts[1]))
    return pairs


def parse_generators(c: DGCategory, text: Optional[str]) -> tuple[list[str], list[TwistedComplex]]:
    """'x,y[1]' → representables h_x and h_y[1]."""
    if text is None:
        return list(c.objects), [TwistedComplex.representable(c, x) for x in c.objects]
    labels, gens = [], []
    for chunk in filter(None, (s.strip() for s in text.split(","))):
        match = GENERATOR.match(chunk)
        if match is None:
            raise SpecSchemaError(f"generator {chunk!r} must look like x or x[n]", "--generators")
        name, shift = match.group(1), int(match.group(2) or 0)
        c.require(name)
        labels.append(chunk)
        gens.append(TwistedComplex.representable(c, name, shift))
    return labels, gens


# ═══════════════════════════════════════════════════════════════════════════
# INPUTS
# ═══════════════════════════════════════════════════════════════════════════

def _load_lattice(args: argparse.Namespace) -> tuple[EulerLattice, list[str], Optional[IntMatrix]]:
    """A lattice file ({"gram": ...}) or a category with generators."""
    data = load_json(read_text(args.input))
    if isinstance(data, dict) and "gram" in data:
        spec = validate_model(LatticeSpecFile, data)
        n = len(spec.gram)
        serre = IntMatrix.from_rows(spec.serre, cols=n) if spec.serre is not None else None
        if serre is not None and serre.shape != (n, n):
            raise SpecSchemaError(f"serre has shape {serre.shape}, expected {n}x{n}", "serre")
        return EulerLattice.from_rows(spec.gram), [f"e{i}" for i in range(n)], serre
    category = build_category(validate_model(CategorySpecFile, data), args.field)
    labels, gens = parse_generators(category, getattr(args, "generators", None))
    return gram_from_category(category, gens), labels, None


# ═══════════════════════════════════════════════════════════════════════════
# COMMANDS
# ═══════════════════════════════════════════════════════════════════════════

def cmd_chi_gram(args: argparse.Namespace) -> tuple[Report, int]:
    category = build_category(validate_model(CategorySpecFile, load_json(read_text(args.input))), args.field)
    labels, gens = parse_generators(category, args.generators)
    lattice = gram_from_category(category, gens)

    report = Report("chi-gram", "EULER PAIRING", Path(args.input).name)
    report.item("field", category.field.label)
    report.item("generators", ", ".join(labels) if labels else "(none)")
    report.section("Gram matrix G[i][j] = χ(g_i, g_j)")
    report.matrix("G", lattice.gram)
    report.record("generators", labels)
    report.record("gram", lattice.gram.to_rows())
    return report, EXIT_OK


def cmd_numk(args: argparse.Namespace) -> tuple[Report, int]:
    lattice, labels, serre = _load_lattice(args)
    if serre is not None:
        lattice = lattice.with_serre(serre)
    kernels = chi_kernels(lattice)

    report = Report("numk", "NUMERICAL GROTHENDIECK GROUP", Path(args.input).name)
    report.item("basis", ", ".join(labels) if labels else "(none)")
    report.section("Gram matrix")
    report.matrix("G", lattice.gram)
    report.section("Kernels of χ")
    report.item("left  {v : vᵀG = 0}", format_vectors(kernels.left.vectors()))
    report.item("right {v : Gv = 0}", format_vectors(kernels.right.vectors()))
    report.item("agree", mark(kernels.agree))
    report.record("gram", lattice.gram.to_rows())
    report.record("left_kernel", [list(v) for v in kernels.left.vectors()])
    report.record("right_kernel", [list(v) for v in kernels.right.vectors()])

    if not kernels.agree:
        report.verdict(False, "χ has different left and right kernels; N is not defined")
        return report, EXIT_FAILED

    n = numerical_group(lattice)
    report.section("N = K_0 / Ker χ")
    report.item("invariant factors", list(n.normalized()) or "(trivial)")
    report.item("free rank", n.free_rank)
    report.record("invariant_factors", list(n.normalized()))
    report.record("free_rank", n.free_rank)
    report.verdict(True, f"N ≅ Z^{n.free_rank}")
    return report, EXIT_OK


def cmd_quotient(args: argparse.Namespace) -> tuple[Report, int]:
    triple = load_triple(args.input, args.depth, args.field)
    q = triple.quotient()
    expected = triple.expected_pairs()
    if args.pairs:
        pairs = parse_pairs(args.pairs)
    elif expected:
        pairs = list(expected)
    else:
        pairs = [(a, b) for a in q.objects for b in q.objects]
    unknown = sorted({x for pair in pairs for x in pair} - set(q.objects))
    if unknown:
        raise UnknownObjectError(f"pairs name unknown objects {unknown}")

    report = Report("quotient", "DRINFELD QUOTIENT", Path(args.input).name)
    report.item("objects", ", ".join(q.objects))
    report.item("contracted", ", ".join(q.contracted) if q.contracted else "(none)")
    report.item("depth", q.depth)

    report.section("Trust window")
    window = {}
    for a in q.objects:
        for b in q.objects:
            window[f"{a}->{b}"] = q.trust.describe(a, b)
            report.item(f"Hom({a}, {b})", window[f"{a}->{b}"])
    report.record("trust", window)

    report.section("H^0 of quotient homs")
    h0 = {}
    for a, b in pairs:
        trusted = q.trust.trusts(a, b, 0)
        dims = cohomology_dimensions(q.hom(a, b))
        h0[f"{a}->{b}"] = dims.get(0, 0) if trusted else None
        shown = dims.get(0, 0) if trusted else f"untrusted at depth {q.depth} ({q.trust.describe(a, b)})"
        report.item(f"H^0 Hom({a}, {b})", shown)
    report.record("h0", h0)

    validation = q.validate()
    report.section("Axioms on the materialized range")
    report.item("checked pairs", validation.checked_pairs)
    report.item("skipped pairs", validation.skipped_pairs)
    report.item("violations", len(validation.violations))
    for v in validation.violations[:10]:
        report.line(f"  {v.axiom.value}: {', '.join(v.elements)} {v.detail}".rstrip())
    report.record("violations", len(validation.violations))
    ok = validation.ok

    if expected:
        comparison = compare_h0(q, expected)
        report.section("Comparison with expected H^0")
        for p in comparison.pairs:
            got = p.computed if p.trusted else "untrusted"
            report.item(f"Hom({p.source}, {p.target})", f"expected {p.expected}, got {got}  {mark(p.matches)}")
        mismatched = [p for p in comparison.pairs if p.trusted and not p.matches]
        untrusted = [p for p in comparison.pairs if not p.trusted]
        if untrusted:
            report.line()
            report.line(f"{len(untrusted)} pair(s) untrusted; increase --depth to compare them")
        report.record("comparison", [p.model_dump() for p in comparison.pairs])
        ok = ok and not mismatched

    report.verdict(ok, "quotient checks passed" if ok else "quotient checks failed")
    return report, EXIT_OK if ok else EXIT_FAILED


def cmd_verify_sequence(args: argparse.Namespace) -> tuple[Report, int]:
    triple = load_triple(args.input, args.depth, args.field)
    t = build_k_triple(triple, witness=not args.no_witness)
    k0 = triple.spec.k0
    expected = presentation_from_factors(k0.expected_coker) if k0 and k0.expected_coker is not None else None

    report = Report("verify-sequence", "EXACT SEQUENCES", Path(args.input).name)
    report.item("ranks I, A, Q", f"{t.lattice_i.rank}, {t.lattice_a.rank}, {t.lattice_q.rank}")
    report.matrix("i*", t.i_star)
    report.matrix("q*", t.q_star)
    report.item("K_0(Q) relations", format_vectors(t.quotient_relations.vectors()))

    report.section("K_0(I) → K_0(A) → K_0(Q) → 0")
    k0_report = verify_k0_sequence(t, expected)
    report.item("composite zero", mark(k0_report.composite_zero))
    report.item("image = kernel", mark(k0_report.image_equals_kernel))
    if k0_report.index is not None and not k0_report.image_equals_kernel:
        report.item("index", k0_report.index)
    if k0_report.witness is not None:
        report.item("kernel witness", k0_report.witness)
    report.item("surjective", mark(k0_report.surjective))
    report.item("coker i*", k0_report.cokernel_factors or "0")
    if k0_report.cokernel_matches is not None:
        report.item("expected coker", f"{k0_report.expected_cokernel_factors}  {mark(k0_report.cokernel_matches)}")
    report.record("k0", k0_report.model_dump())

    report.section("Hypotheses")
    hypotheses = t.hypotheses()
    report.item("thick", hypotheses.thick.value)
    report.item("q preserves compacts", hypotheses.q_preserves_compacts.value)
    for b, status in t.witnesses.items():
        report.line(f"  perfectness of h_{b}|I: {status}")
    report.item("coker i* torsion-free", mark(hypotheses.cokernel_torsion_free))
    report.item("route", hypotheses.route.value)

    numerical = verify_numerical_sequence(t)
    report.section("Kernel compatibility")
    for v in numerical.kermaps.verdicts:
        backing = "theorem-backed" if v.theorem_backed else "not forced"
        report.item(f"{mark(v.holds)} {v.name}", f"[{backing}] {v.detail}")
        for w in v.witnesses:
            report.line(f"    witness {w}")

    report.section("N(I) → N(A) → N(Q) → 0")
    report.item("ranks", numerical.ranks)
    report.matrix("N(i*)", numerical.induced_i)
    report.matrix("N(q*)", numerical.induced_q)
    report.item("exact at N(A)", mark(numerical.exactness.exact))
    report.item("surjective", mark(numerical.exactness.surjective))
    report.item("K_0(A)/(i*K_0(I) + Ker χ_A)", numerical.cross_check_factors or "0")
    report.item("N(Q)", numerical.quotient_factors or "0")
    report.item("cross-check", mark(numerical.cross_check_matches))
    report.record("numerical", numerical.model_dump(mode="json"))

    ok = k0_report.passed and numerical.passed
    if not numerical.theorem_backed:
        text = f"hypotheses unmet ({numerical.route.value}); the numerical sequence is not backed"
    elif ok:
        text = f"sequences verified ({numerical.route.value})"
    else:
        text = "a theorem-backed check failed"
    report.verdict(ok, text)
    return report, EXIT_OK if ok else EXIT_FAILED


def cmd_verify_serre(args: argparse.Namespace) -> tuple[Report, int]:
    lattice, labels, supplied = _load_lattice(args)
    serre = supplied if supplied is not None else serre_from_gram(lattice)
    residual = lattice.gram.T - lattice.gram @ serre
    kernels = chi_kernels(lattice)

    report = Report("verify-serre", "SERRE FUNCTOR", Path(args.input).name)
    report.item("basis", ", ".join(labels) if labels else "(none)")
    report.item("S", "supplied" if supplied is not None else "computed as G⁻¹Gᵀ")
    report.section("Matrices")
    report.matrix("G", lattice.gram)
    report.matrix("S", serre)
    report.matrix("Gᵀ − G·S", residual)
    report.section("Checks")
    report.item("Gᵀ = G·S", mark(residual.is_zero()))
    report.item("S invertible over Z", mark(serre.is_unimodular()))
    report.item("left = right kernel", mark(kernels.agree))
    report.record("gram", lattice.gram.to_rows())
    report.record("serre", serre.to_rows())
    report.record("residual", residual.to_rows())
    report.record("kernels_agree", kernels.agree)

    ok = residual.is_zero() and serre.is_unimodular() and kernels.agree
    report.verdict(ok, "Serre matrix verified" if ok else "Serre matrix rejected")
    return report, EXIT_OK if ok else EXIT_FAILED


def cmd_snf(args: argparse.Namespace) -> tuple[Report, int]:
    data = load_json(read_text(args.input))
    if isinstance(data, dict) and "gram" in data and "matrix" not in data:
        data = {"matrix": data["gram"]}
    spec = validate_model(MatrixSpecFile, data)
    cols = len(spec.matrix[0]) if spec.matrix else 0
    m = IntMatrix.from_rows(spec.matrix, cols=cols)
    u, d, v = smith_normal_form(m)

    report = Report("snf", "SMITH NORMAL FORM", Path(args.input).name)
    report.item("shape", f"{m.rows}x{m.cols}")
    report.section("D = U·M·V")
    report.matrix("M", m)
    report.matrix("U", u)
    report.matrix("D", d)
    report.matrix("V", v)
    factors = [d[i, i] for i in range(min(d.rows, d.cols)) if d[i, i] != 0]
    report.section("Invariants")
    report.item("invariant factors", factors or "(none)")
    report.item("rank", len(factors))
    report.record("U", u.to_rows())
    report.record("D", d.to_rows())
    report.record("V", v.to_rows())
    report.record("invariant_factors", factors)

    ok = u @ m @ v == d and u.is_unimodular() and v.is_unimodular()
    report.verdict(ok, "U·M·V = D with U, V unimodular" if ok else "normal form check failed")
    return report, EXIT_OK if ok else EXIT_FAILED


def cmd_fuzz(args: argparse.Namespace) -> tuple[Report, int]:
    settings = get_settings()
    seed = settings.default_seed if args.seed is None else args.seed
    depth = settings.default_depth if args.depth is None else args.depth
    k = parse_field(args.field or settings.default_field)

    report = Report("fuzz", "RANDOM CATEGORIES")
    report.item("seed", seed)
    report.item("count", args.count)
    report.item("depth", depth)
    report.item("field", k.label)
    report.section("Instances")

    failures = []
    for i in range(args.count):
        rng = random.Random(seed + i)
        try:
            c = random_category(rng, max_objects=3, max_dim=2, k=k)
            contract = rng.sample(list(c.objects), rng.choice((0, 1)))
            base_ok = c.validate().ok
            q = drinfeld_quotient(c, contract, depth)
            q_ok = q.validate().ok
            line = f"{len(c.objects)} objects, contract {contract or '[]'}: base {mark(base_ok)} quotient {mark(q_ok)}"
            if not (base_ok and q_ok):
                failures.append(seed + i)
        except DGKitError as e:
            line = f"ERROR {type(e).__name__}: {e}"
            failures.append(seed + i)
        report.item(f"seed {seed + i}", line)

    report.record("seed", seed)
    report.record("count", args.count)
    report.record("failures", failures)
    ok = not failures
    report.verdict(ok, f"{args.count} instances valid" if ok else f"failing seeds: {failures}")
    return report, EXIT_OK if ok else EXIT_FAILED


COMMANDS: dict[str, Callable[[argparse.Namespace], tuple[Report, int]]] = {
    "chi-gram": cmd_chi_gram,
    "numk": cmd_numk,
    "quotient": cmd_quotient,
    "verify-sequence": cmd_verify_sequence,
    "verify-serre": cmd_verify_serre,
    "snf": cmd_snf,
    "fuzz": cmd_fuzz,
}


# ═══════════════════════════════════════════════════════════════════════════
# ENTRY POINT
# ═══════════════════════════════════════════════════════════════════════════

def emit(report: Report, target: Optional[str]) -> None:
    if target == "-":
        sys.stdout.write(report.to_json())
        return
    sys.stdout.write(report.text())
    if target is not None:
        Path(target).write_text(report.to_json(), encoding="utf-8")


def main(argv: Optional[list[str]] = None) -> int:
    """Main entry point for the dgkit CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    try:
        report, code = COMMANDS[args.command](args)
    except KernelMismatchError as e:
        print(f"ERROR: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILED
    except DGKitError as e:
        print(f"ERROR: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT

    try:
        emit(report, args.json)
    except OSError as e:
        print(f"ERROR: OSError: cannot write {args.json}: {e.strerror}", file=sys.stderr)
        return EXIT_INPUT
    logger.debug(f"{args.command} finished with exit code {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
