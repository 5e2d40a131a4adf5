"""
DGKIT PERFECT OBJECT TESTS

Twisted complexes, hom complexes, Euler pairings, modules, transport
along functors and the bounded perfectness search.
"""

import random

import pytest
from hypothesis import given, strategies as st

from src.contracts.errors import MaurerCartanError, ShapeMismatchError
from src.contracts.schemas import PerfectnessStatus
from src.dgcat.functor import full_subcategory
from src.dgcat.random_gen import random_category
from src.drinfeld.quotient import drinfeld_quotient, quotient_functor
from src.perfect.homs import (
    chi,
    cohomology_dimensions,
    euler_char,
    euler_char_from_cohomology,
    hom_complex,
    is_acyclic,
    total_differential,
)
from src.perfect.module import hom_to_module, module_of, representable_module, zero_module
from src.perfect.search import (
    bounded_perfectness_search,
    is_quasi_iso,
    perfectness_witness_for_inclusion,
)
from src.perfect.transport import extend_morphism, extend_scalars, restrict_module
from src.perfect.twisted import (
    PerfMorphism,
    TwistedComplex,
    compose_morphisms,
    cone,
    identity_morphism,
    shift,
    zero_morphism,
)


def arrow_f(a2) -> PerfMorphism:
    """h_x → h_y given by f."""
    hx = TwistedComplex.representable(a2, "x")
    hy = TwistedComplex.representable(a2, "y")
    return PerfMorphism(hx, hy, {(0, 0): {0: a2.field.one}})


# ═══════════════════════════════════════════════════════════════════════════
# TWISTED COMPLEXES
# ═══════════════════════════════════════════════════════════════════════════

class TestTwistedComplex:
    """Test one-sided twisted complexes and Maurer–Cartan."""

    def test_representable_is_maurer_cartan(self, a2):
        """Test h_x has no twist and satisfies MC."""
        hx = TwistedComplex.representable(a2, "x")
        assert len(hx) == 1
        assert hx.is_maurer_cartan()

    def test_twist_of_wrong_degree(self, a2):
        """Test that α_01 = f is refused when degree 1 is required."""
        with pytest.raises(MaurerCartanError):
            TwistedComplex(a2, (("y", 0), ("x", 0)), {(0, 1): {0: a2.field.one}})

    def test_twist_must_be_one_sided(self, a2):
        """Test that a lower-triangular twist is refused."""
        with pytest.raises(MaurerCartanError):
            TwistedComplex(a2, (("x", 0), ("y", 1)), {(1, 0): {0: a2.field.one}})

    def test_maurer_cartan_failure(self, koszul):
        """Test that α = ξ with dξ = s ≠ 0 fails MC."""
        _, _, xi = koszul.locate("xi")
        with pytest.raises(MaurerCartanError):
            TwistedComplex.build(koszul, [("o", 0), ("o", 2)], {(0, 1): {xi: koszul.field.one}})

    def test_maurer_cartan_with_closed_twist(self, koszul):
        """Test that α = s is a valid twist since ds = 0."""
        _, _, s = koszul.locate("s")
        x = TwistedComplex.build(koszul, [("o", 0), ("o", 1)], {(0, 1): {s: koszul.field.one}})
        assert x.is_maurer_cartan()

    def test_shift_twice(self, a2):
        """Test X[1][-1] = X."""
        x = cone(arrow_f(a2))
        assert shift(shift(x, 1), -1) == x

    def test_cone_of_f(self, a2):
        """Test Cone(f) has entries y, x[1] and twist f."""
        c = cone(arrow_f(a2))
        assert c.entries == (("y", 0), ("x", 1))
        assert c.alpha(0, 1) == {0: a2.field.one}
        assert c.is_maurer_cartan()

    def test_cone_needs_degree_zero(self, a2):
        """Test a cone of a degree-1 morphism is refused."""
        hx = TwistedComplex.representable(a2, "x")
        with pytest.raises(ShapeMismatchError):
            cone(zero_morphism(hx, hx, 1))


# ═══════════════════════════════════════════════════════════════════════════
# HOM COMPLEXES AND EULER PAIRINGS
# ═══════════════════════════════════════════════════════════════════════════

class TestHoms:
    """Test hom complexes between twisted complexes."""

    def test_a2_pairings(self, a2):
        """Test χ(x, y) = 1 and χ(y, x) = 0 with the source first."""
        hx = TwistedComplex.representable(a2, "x")
        hy = TwistedComplex.representable(a2, "y")
        assert chi(hx, hy) == 1
        assert chi(hy, hx) == 0
        assert chi(hx, hx) == 1

    def test_shift_negates_pairing(self, a2):
        """Test χ(X[1], Y) = -χ(X, Y)."""
        hx = TwistedComplex.representable(a2, "x")
        hy = TwistedComplex.representable(a2, "y")
        assert chi(shift(hx, 1), hy) == -chi(hx, hy)

    @pytest.mark.parametrize("n", [1, 2, -1])
    def test_shifted_hom_complexes(self, a2, n):
        """Test Hom(X, Y[n]) is Hom(X, Y)[n] and Hom(X[n], Y) raises degrees by n."""
        x = cone(arrow_f(a2))
        y = TwistedComplex.representable(a2, "y")
        h = hom_complex(x, y)
        assert hom_complex(x, shift(y, n)) == h.shifted(n)
        source_shifted = hom_complex(shift(x, n), y)
        assert source_shifted.degrees == tuple(d + n for d in h.degrees)
        assert source_shifted.differential == h.differential
        assert cohomology_dimensions(source_shifted) == {
            p + n: d for p, d in cohomology_dimensions(h).items()
        }

    def test_cone_is_additive(self, a2):
        """Test χ(h_a, Cone f) = χ(h_a, h_y) - χ(h_a, h_x)."""
        c = cone(arrow_f(a2))
        for a in a2.objects:
            ha = TwistedComplex.representable(a2, a)
            hx = TwistedComplex.representable(a2, "x")
            hy = TwistedComplex.representable(a2, "y")
            assert chi(ha, c) == chi(ha, hy) - chi(ha, hx)

    def test_koszul_cohomology(self, koszul):
        """Test End(o) has cohomology k in degrees 0 and -1."""
        ho = TwistedComplex.representable(koszul, "o")
        h = hom_complex(ho, ho)
        assert h.d_squared_zero()
        assert cohomology_dimensions(h) == {0: 1, -1: 1}
        assert chi(ho, ho) == 0

    def test_euler_characteristic_from_cohomology(self, a2):
        """Test Σ(-1)^n dim C^n = Σ(-1)^n dim H^n on a cone."""
        c = cone(arrow_f(a2))
        h = hom_complex(c, c)
        assert euler_char(h) == euler_char_from_cohomology(h)

    def test_identity_is_closed(self, a2):
        """Test D(id) = 0."""
        c = cone(arrow_f(a2))
        assert not total_differential(identity_morphism(c)).components
        assert identity_morphism(c).is_closed()

    def test_composition_with_identity(self, a2):
        """Test id ∘ f = f."""
        f = arrow_f(a2)
        assert compose_morphisms(identity_morphism(f.target), f) == f

    def test_quasi_isomorphisms(self, a2):
        """Test the identity is a quasi-isomorphism and f is not."""
        hx = TwistedComplex.representable(a2, "x")
        assert is_quasi_iso(identity_morphism(hx))
        assert not is_quasi_iso(arrow_f(a2))

    def test_cone_of_f_seen_from_x_is_acyclic(self, a2):
        """Test Hom(h_x, Cone f) is acyclic since f_*: Hom(x, x) → Hom(x, y) is bijective."""
        hx = TwistedComplex.representable(a2, "x")
        assert is_acyclic(hom_complex(hx, cone(arrow_f(a2))))


# ═══════════════════════════════════════════════════════════════════════════
# MODULES
# ═══════════════════════════════════════════════════════════════════════════

class TestModules:
    """Test right DG modules and transport."""

    def test_representable_module(self, a2):
        """Test h_y: fibers Hom(a, y) and valid axioms."""
        m = representable_module(a2, "y")
        assert m.fiber("x").total_dimension == 1
        assert m.fiber("y").total_dimension == 1
        assert m.validate().ok

    def test_module_of_representable(self, koszul):
        """Test the module realized by h_o has the fibers of the representable."""
        ho = TwistedComplex.representable(koszul, "o")
        m = module_of(ho)
        assert m.validate().ok
        assert m.fiber("o").total_dimension == koszul.dim("o", "o")

    def test_hom_from_representable(self, a2):
        """Test Hom(h_x, M) = M_x."""
        hx = TwistedComplex.representable(a2, "x")
        m = representable_module(a2, "y")
        assert hom_to_module(hx, m).total_dimension == m.fiber("x").total_dimension

    def test_restriction_along_inclusion(self, a2):
        """Test h_y restricted to {x} is one-dimensional and valid."""
        _, inclusion = full_subcategory(a2, ["x"])
        restricted = restrict_module(inclusion, representable_module(a2, "y"))
        assert restricted.fiber("x").total_dimension == 1
        assert restricted.validate().ok

    def test_extension_of_representable(self, a2):
        """Test extending h_x along the inclusion gives h_x in A2."""
        sub, inclusion = full_subcategory(a2, ["x"])
        extended = extend_scalars(inclusion, TwistedComplex.representable(sub, "x"))
        assert extended == TwistedComplex.representable(a2, "x")

    def test_extension_along_quotient_functor(self, a2):
        """Test q_! Cone(f) is Maurer–Cartan in A2/⟨x⟩ and commutes with cone and shift."""
        q = quotient_functor(drinfeld_quotient(a2, ["x"], 3))
        f = arrow_f(a2)
        extended = extend_scalars(q, cone(f))
        assert extended.is_maurer_cartan()
        assert extended == cone(extend_morphism(q, f))
        assert extend_scalars(q, shift(cone(f), 1)) == shift(extended, 1)

    def test_adjunction_along_quotient_functor(self, a2):
        """Test Hom(q_! X, M) = Hom(X, q^* M) for X = Cone(f) and M = h_y on A2/⟨x⟩."""
        q = quotient_functor(drinfeld_quotient(a2, ["x"], 3))
        x = cone(arrow_f(a2))
        m = representable_module(q.target, "y")
        lhs = hom_to_module(extend_scalars(q, x), m)
        rhs = hom_to_module(x, restrict_module(q, m))
        assert cohomology_dimensions(lhs) == cohomology_dimensions(rhs)
        assert euler_char(lhs) == euler_char(rhs)


# ═══════════════════════════════════════════════════════════════════════════
# PERFECTNESS SEARCH
# ═══════════════════════════════════════════════════════════════════════════

class TestPerfectnessSearch:
    """Test the bounded search for twisted-complex resolutions."""

    def test_representable_resolves_in_one_step(self, a2):
        """Test h_x is resolved by h_x itself."""
        result = bounded_perfectness_search(representable_module(a2, "x"))
        assert result.status == PerfectnessStatus.PERFECT
        assert result.verified
        assert result.witness.entries == (("x", 0),)

    def test_second_representable(self, a2):
        """Test h_y is found perfect with a verified witness."""
        result = bounded_perfectness_search(representable_module(a2, "y"))
        assert result.perfect and result.verified
        assert result.witness.is_maurer_cartan()

    def test_zero_module(self, a2):
        """Test the zero module needs no entries."""
        result = bounded_perfectness_search(zero_module(a2))
        assert result.perfect
        assert len(result.witness) == 0

    def test_bound_is_respected(self, a2):
        """Test max_len = 0 gives up on a nonzero module."""
        result = bounded_perfectness_search(representable_module(a2, "x"), max_len=0)
        assert result.status == PerfectnessStatus.NOT_FOUND_WITHIN_BOUND
        assert result.witness is None

    def test_koszul_representable(self, koszul):
        """Test h_o over the Koszul category is perfect."""
        result = bounded_perfectness_search(representable_module(koszul, "o"))
        assert result.perfect and result.verified

    def test_witness_for_inclusion(self, a2):
        """Test every h_b restricted to {x} is perfect."""
        results = perfectness_witness_for_inclusion(a2, ["x"])
        assert set(results) == {"x", "y"}
        assert all(r.perfect and r.verified for r in results.values())


# ═══════════════════════════════════════════════════════════════════════════
# RANDOM INSTANCES
# ═══════════════════════════════════════════════════════════════════════════

def degree_zero_arrows(c):
    """Every (a, b, index) with a degree-0 basis element of Hom(a, b)."""
    return [
        (a, b, t)
        for a in c.objects for b in c.objects
        for t, e in enumerate(c.basis(a, b)) if e.degree == 0
    ]


def random_arrow(rng: random.Random, c) -> PerfMorphism:
    """h_a → h_b given by a random degree-0 basis element."""
    a, b, t = rng.choice(degree_zero_arrows(c))
    hx = TwistedComplex.representable(c, a)
    hy = TwistedComplex.representable(c, b)
    return PerfMorphism(hx, hy, {(0, 0): {t: c.field.one}})


def cone_additivity_holds(seed: int) -> bool:
    rng = random.Random(seed)
    c = random_category(rng, max_objects=3, max_dim=2)
    f = random_arrow(rng, c)
    cf = cone(f)
    hz = TwistedComplex.representable(c, rng.choice(c.objects))
    h = hom_complex(hz, cf)
    return (
        chi(hz, cf) == chi(hz, f.target) - chi(hz, f.source)
        and chi(cf, hz) == chi(f.target, hz) - chi(f.source, hz)
        and euler_char(h) == euler_char_from_cohomology(h)
    )


def adjunction_holds(seed: int) -> bool:
    """
    Hom(F_! X, M) and Hom(X, F^* M) agree for X a cone, along a full
    inclusion for even seeds and along a quotient functor for odd ones.
    """
    rng = random.Random(seed)
    c = random_category(rng, max_objects=3, max_dim=2)
    if seed % 2 == 0:
        kept = rng.sample(list(c.objects), rng.randint(1, len(c.objects)))
        sub, functor = full_subcategory(c, kept)
        x = cone(random_arrow(rng, sub))
    else:
        contract = rng.sample(list(c.objects), rng.choice((0, 1)))
        functor = quotient_functor(drinfeld_quotient(c, contract, 2))
        x = cone(random_arrow(rng, c))
    x = shift(x, rng.randint(-1, 1))
    m = representable_module(functor.target, rng.choice(functor.target.objects))
    lhs = hom_to_module(extend_scalars(functor, x), m)
    rhs = hom_to_module(x, restrict_module(functor, m))
    return euler_char(lhs) == euler_char(rhs) and cohomology_dimensions(lhs) == cohomology_dimensions(rhs)


class TestRandomInstances:
    """Test additivity and adjunction identities on random quiver categories."""

    @given(st.integers(0, 10_000))
    def test_chi_is_additive_on_cones(self, seed):
        """Test χ on Cone(f) is χ on Y minus χ on X, in both arguments."""
        assert cone_additivity_holds(seed)

    @given(st.integers(0, 10_000))
    def test_euler_characteristic_agrees_with_cohomology(self, seed):
        """Test both Euler characteristics on hom complexes of random objects."""
        rng = random.Random(seed)
        c = random_category(rng, max_objects=3, max_dim=2)
        x = TwistedComplex.representable(c, rng.choice(c.objects), rng.randint(-1, 1))
        y = TwistedComplex.representable(c, rng.choice(c.objects))
        h = hom_complex(x, y)
        assert euler_char(h) == euler_char_from_cohomology(h)

    @given(st.integers(0, 10_000))
    def test_extension_and_restriction_are_adjoint(self, seed):
        """Test Hom(F_! X, M) against Hom(X, F^* M) for cones X."""
        assert adjunction_holds(seed)

    @given(st.integers(0, 10_000))
    def test_quotient_transport_of_cones(self, seed):
        """Test q_! Cone(f) is Maurer–Cartan and commutes with cone and shift."""
        rng = random.Random(seed)
        c = random_category(rng, max_objects=3, max_dim=2)
        contract = rng.sample(list(c.objects), rng.choice((0, 1)))
        q = quotient_functor(drinfeld_quotient(c, contract, 2))
        f = random_arrow(rng, c)
        extended = extend_scalars(q, cone(f))
        assert extended.is_maurer_cartan()
        assert extended == cone(extend_morphism(q, f))
        n = rng.randint(-2, 2)
        assert extend_scalars(q, shift(cone(f), n)) == shift(extended, n)

    @given(st.integers(0, 10_000))
    def test_shifted_hom_complexes(self, seed):
        """Test Hom(X, Y[n]) = Hom(X, Y)[n] with X a random cone."""
        rng = random.Random(seed)
        c = random_category(rng, max_objects=3, max_dim=2)
        x = cone(random_arrow(rng, c))
        y = TwistedComplex.representable(c, rng.choice(c.objects))
        n = rng.randint(-2, 2)
        assert hom_complex(x, shift(y, n)) == hom_complex(x, y).shifted(n)

    def test_yoneda_on_a_cone(self, a2):
        """Test Hom(h_a, Cone f) agrees with the fiber of its module."""
        c = cone(arrow_f(a2))
        m = module_of(c)
        for a in a2.objects:
            ha = TwistedComplex.representable(a2, a)
            assert euler_char(hom_to_module(ha, m)) == chi(ha, c)


@pytest.mark.slow
class TestSeededSweeps:
    """Test fixed seed ranges at full size."""

    def test_chi_additivity_over_200_seeds(self):
        """Test cone additivity and both Euler characteristics for 200 seeds."""
        failing = [seed for seed in range(200) if not cone_additivity_holds(seed)]
        assert failing == []

    def test_adjunction_over_100_seeds(self):
        """Test the adjunction identity along inclusions and quotients for 100 seeds."""
        failing = [seed for seed in range(100) if not adjunction_holds(seed)]
        assert failing == []
