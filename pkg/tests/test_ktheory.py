"""
DGKIT K-THEORY TESTS

Euler lattices, Serre matrices, numerical Grothendieck groups and the
exact-sequence verifier with its hypothesis routes.
"""

import pytest

from src.contracts.errors import (
    KernelMismatchError,
    SerreError,
    ShapeMismatchError,
    UnknownObjectError,
)
from src.contracts.schemas import HypothesisSource, Provenance, SequenceRoute
from src.dgcat.quiver import Arrow, QuiverPresentation, from_quiver
from src.ktheory.euler_lattice import (
    EulerLattice,
    chi_kernels,
    gram_from_category,
    induced_numerical_map,
    numerical_group,
    serre_from_gram,
)
from src.ktheory.verifier import (
    KTriple,
    check_kermaps,
    verify_k0_sequence,
    verify_numerical_sequence,
)
from src.lattice.intmatrix import IntMatrix
from src.lattice.presentation import presentation_from_factors
from src.lattice.sublattice import Sublattice
from src.perfect.twisted import TwistedComplex


def lattice(rows, serre=None) -> EulerLattice:
    return EulerLattice.from_rows(rows, serre)


@pytest.fixture
def a2_lattice() -> EulerLattice:
    return lattice([[1, 1], [0, 1]])


@pytest.fixture
def split_triple(a2_lattice) -> KTriple:
    """I = ⟨x⟩ ⊂ A2 with Q = ⟨y⟩, flags set by each test."""
    return KTriple(
        lattice([[1]]), a2_lattice, lattice([[1]]),
        IntMatrix.from_rows([[1], [0]]), IntMatrix.from_rows([[0, 1]]),
        thick=HypothesisSource.ASSERTED,
    )


@pytest.fixture
def torsion_triple() -> KTriple:
    """K_0: Z --2--> Z --1--> Z/2 with a degenerate pairing on Q."""
    return KTriple(
        lattice([[4]]), lattice([[1]]), lattice([[0]]),
        IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[1]]),
        Sublattice.from_generators(1, [[2]]),
        thick=HypothesisSource.ASSERTED,
    )


# ═══════════════════════════════════════════════════════════════════════════
# EULER LATTICES
# ═══════════════════════════════════════════════════════════════════════════

class TestEulerLattice:
    """Test Gram matrices, Serre matrices and kernels."""

    def test_gram_of_a2(self, a2):
        """Test G = [[1, 1], [0, 1]] on h_x, h_y."""
        gens = [TwistedComplex.representable(a2, a) for a in a2.objects]
        g = gram_from_category(a2, gens)
        assert g.gram.to_rows() == [[1, 1], [0, 1]]
        assert g.provenance == Provenance.COMPUTED

    def test_gram_of_koszul(self, koszul):
        """Test χ(o, o) = 0."""
        g = gram_from_category(koszul, [TwistedComplex.representable(koszul, "o")])
        assert g.gram.to_rows() == [[0]]

    def test_empty_generators(self, a2):
        """Test no generators give the rank-0 lattice."""
        assert gram_from_category(a2, []).rank == 0

    def test_shifted_generator(self, a2):
        """Test G changes sign in the row and column of a shifted generator."""
        gens = [TwistedComplex.representable(a2, "x", 1), TwistedComplex.representable(a2, "y")]
        assert gram_from_category(a2, gens).gram.to_rows() == [[1, -1], [0, 1]]

    def test_generators_from_another_category(self, a2, koszul):
        """Test a generator over a different category is refused."""
        with pytest.raises(UnknownObjectError):
            gram_from_category(a2, [TwistedComplex.representable(koszul, "o")])

    def test_serre_of_a2(self, a2_lattice):
        """Test S = G⁻¹Gᵀ = [[0, -1], [1, 1]]."""
        s = serre_from_gram(a2_lattice)
        assert s.to_rows() == [[0, -1], [1, 1]]
        assert a2_lattice.gram.T == a2_lattice.gram @ s

    def test_serre_needs_unimodular_gram(self):
        """Test a degenerate G has no computed Serre matrix."""
        with pytest.raises(SerreError):
            serre_from_gram(lattice([[2]]))

    def test_supplied_serre_is_checked(self):
        """Test a wrong Serre matrix is refused."""
        with pytest.raises(SerreError):
            lattice([[1, 1], [0, 1]], [[1, 0], [0, 1]])

    def test_supplied_serre_is_accepted(self):
        """Test the correct Serre matrix is kept."""
        lat = lattice([[1, 1], [0, 1]], [[0, -1], [1, 1]])
        assert lat.serre.to_rows() == [[0, -1], [1, 1]]

    def test_degenerate_kernels_agree(self):
        """Test [[1, 1], [1, 1]] has equal left and right kernels."""
        k = chi_kernels(lattice([[1, 1], [1, 1]]))
        assert k.agree
        assert k.right.contains([1, -1])

    def test_shape_mismatch(self):
        """Test a Gram matrix of the wrong size."""
        with pytest.raises(ShapeMismatchError):
            EulerLattice(2, IntMatrix.identity(3))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_linear_quivers(self, q_field, n):
        """Test A_n: unimodular G, integral S, zero residual, zero kernels."""
        vertices = tuple(f"v{i}" for i in range(n))
        arrows = tuple(Arrow(f"a{i}", vertices[i], vertices[i + 1]) for i in range(n - 1))
        c = from_quiver(QuiverPresentation(vertices, arrows), q_field)
        lat = gram_from_category(c, [TwistedComplex.representable(c, v) for v in vertices])
        assert lat.gram.to_rows() == [[1 if i <= j else 0 for j in range(n)] for i in range(n)]
        assert lat.gram.is_unimodular()
        s = serre_from_gram(lat)
        assert (lat.gram.T - lat.gram @ s).is_zero()
        k = chi_kernels(lat.with_serre(s))
        assert k.agree and k.left.is_zero() and k.right.is_zero()

    def test_symmetric_degenerate_with_identity_serre(self):
        """Test [[1, 1], [1, 1]] with S = 1: both kernels are span{(1, -1)} and N = Z."""
        lat = lattice([[1, 1], [1, 1]], [[1, 0], [0, 1]])
        k = chi_kernels(lat)
        assert k.agree
        assert k.left.vectors() == k.right.vectors()
        assert k.right.rank == 1 and k.right.contains([1, -1])
        n = numerical_group(lat)
        assert n.normalized() == (0,)



# ═══════════════════════════════════════════════════════════════════════════
# NUMERICAL GROUPS
# ═══════════════════════════════════════════════════════════════════════════

class TestNumericalGroup:
    """Test N = K_0 / Ker χ."""

    def test_nondegenerate(self, a2_lattice):
        """Test N(A2) = Z^2."""
        assert numerical_group(a2_lattice).normalized() == (0, 0)

    def test_degenerate(self):
        """Test N = Z for [[1, 1], [1, 1]]."""
        n = numerical_group(lattice([[1, 1], [1, 1]]))
        assert n.free_rank == 1
        assert not n.torsion

    def test_zero_pairing(self):
        """Test N = 0 when χ vanishes."""
        assert numerical_group(lattice([[0]])).is_trivial

    def test_kernel_mismatch(self):
        """Test different left and right kernels raise with a witness."""
        with pytest.raises(KernelMismatchError) as excinfo:
            numerical_group(lattice([[0, 1], [0, 0]]))
        assert excinfo.value.witness is not None

    def test_induced_map(self, a2_lattice):
        """Test the inclusion of x induces e_x on numerical groups."""
        f = IntMatrix.from_rows([[1], [0]])
        induced = induced_numerical_map(f, lattice([[1]]), a2_lattice)
        assert induced.to_rows() == [[1], [0]]

    def test_induced_map_must_preserve_kernels(self):
        """Test a map sending Ker χ outside Ker χ raises."""
        src = lattice([[0]])
        dst = lattice([[1]])
        with pytest.raises(KernelMismatchError):
            induced_numerical_map(IntMatrix.from_rows([[1]]), src, dst)


# ═══════════════════════════════════════════════════════════════════════════
# SEQUENCE VERIFIER
# ═══════════════════════════════════════════════════════════════════════════

class TestSequenceVerifier:
    """Test the K_0 and numerical sequences with their routes."""

    def test_k0_split_sequence(self, split_triple):
        """Test Z → Z^2 → Z is exact and onto."""
        report = verify_k0_sequence(split_triple)
        assert report.passed

    def test_corollary_route(self, split_triple):
        """Test thick plus torsion-free cokernel takes the corollary route."""
        report = verify_numerical_sequence(split_triple)
        assert report.route == SequenceRoute.COROLLARY
        assert report.passed
        assert report.ranks == [1, 2, 1]

    def test_theorem_route(self, a2_lattice):
        """Test asserted compact preservation takes the theorem route."""
        t = KTriple(
            lattice([[1]]), a2_lattice, lattice([[1]]),
            IntMatrix.from_rows([[1], [0]]), IntMatrix.from_rows([[0, 1]]),
            thick=HypothesisSource.ASSERTED,
            q_preserves_compacts=HypothesisSource.ASSERTED,
        )
        report = verify_numerical_sequence(t)
        assert report.route == SequenceRoute.THEOREM
        assert report.passed

    def test_not_thick_is_unmet(self, a2_lattice):
        """Test a missing thickness flag leaves the sequence unbacked."""
        t = KTriple(
            lattice([[1]]), a2_lattice, lattice([[1]]),
            IntMatrix.from_rows([[1], [0]]), IntMatrix.from_rows([[0, 1]]),
        )
        report = verify_numerical_sequence(t)
        assert report.route == SequenceRoute.HYPOTHESES_UNMET
        assert not report.passed
        assert report.exactness.exact

    def test_k0_with_torsion_quotient(self, torsion_triple):
        """Test K_0 exactness with K_0(Q) = Z/2 and the expected cokernel."""
        report = verify_k0_sequence(torsion_triple, presentation_from_factors([2]))
        assert report.passed
        assert report.cokernel_matches is True

    def test_torsion_cokernel_is_unmet(self, torsion_triple):
        """Test the numerical sequence fails but is not backed when coker i* has torsion."""
        report = verify_numerical_sequence(torsion_triple)
        assert report.route == SequenceRoute.HYPOTHESES_UNMET
        assert not report.hypotheses.cokernel_torsion_free
        assert not report.exactness.exact
        assert report.exactness.index == 2
        assert not report.cross_check_matches

    def test_kermaps_on_torsion(self, torsion_triple):
        """Test only the unforced kernel equality fails."""
        report = check_kermaps(torsion_triple)
        assert report.intersection.holds
        assert report.q_maps_kernel.holds
        assert not report.q_onto_kernel.holds
        assert not report.q_onto_kernel.theorem_backed
        assert report.passed

    def test_shape_checks(self, a2_lattice):
        """Test i* of the wrong shape is refused."""
        with pytest.raises(ShapeMismatchError):
            KTriple(
                lattice([[1]]), a2_lattice, lattice([[1]]),
                IntMatrix.from_rows([[1, 0]]), IntMatrix.from_rows([[0, 1]]),
            )
