"""
DGKIT CONTRACTS — Pydantic schemas for reports and input files.

Every report a validator or verifier returns, and every JSON document the
CLI reads, is defined here. Import from here to keep the packages consistent.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator


# Coefficients travel as ints or rational strings such as "-3/2"
Coefficient = Union[int, str]

# Fixed orientation statement printed in every report header
CHI_CONVENTION = "chi(a, b) = sum_n (-1)^n dim H^n Hom(a, b); first argument is the source"


# ═══════════════════════════════════════════════════════════════════════════
# ENUMS
# ═══════════════════════════════════════════════════════════════════════════

class Axiom(str, Enum):
    """DG category and module axioms checked by validators"""
    D_SQUARED = "d_squared"
    LEIBNIZ = "leibniz"
    ASSOCIATIVITY = "associativity"
    LEFT_UNIT = "left_unit"
    RIGHT_UNIT = "right_unit"
    DEGREE = "degree"
    CHAIN_MAP = "chain_map"
    FUNCTORIALITY = "functoriality"


class PerfectnessStatus(str, Enum):
    """Outcome of the bounded perfectness search"""
    PERFECT = "perfect"
    NOT_FOUND_WITHIN_BOUND = "not_found_within_bound"


class HypothesisSource(str, Enum):
    """Where a hypothesis flag came from"""
    ASSERTED = "asserted"
    WITNESSED = "witnessed"
    ABSENT = "absent"


class SequenceRoute(str, Enum):
    """Which result certifies the numerical exact sequence"""
    THEOREM = "theorem"
    COROLLARY = "corollary"
    HYPOTHESES_UNMET = "hypotheses_unmet"


class Provenance(str, Enum):
    """Origin of an Euler lattice"""
    COMPUTED = "computed-from-category"
    SUPPLIED = "user-supplied"


# ═══════════════════════════════════════════════════════════════════════════
# VALIDATION
# ═══════════════════════════════════════════════════════════════════════════

class AxiomViolation(BaseModel):
    """One failed axiom instance with the offending basis elements"""
    axiom: Axiom
    elements: list[str]
    detail: str = ""


class ValidationReport(BaseModel):
    """Result of validating a DG category or module; empty means valid"""
    violations: list[AxiomViolation] = Field(default_factory=list)
    checked_pairs: int = Field(ge=0, default=0)
    skipped_pairs: int = Field(ge=0, default=0)

    @property
    def ok(self) -> bool:
        return not self.violations

    def by_axiom(self, axiom: Axiom) -> list[AxiomViolation]:
        return [v for v in self.violations if v.axiom == axiom]


# ═══════════════════════════════════════════════════════════════════════════
# LATTICE REPORTS
# ═══════════════════════════════════════════════════════════════════════════

class ExactnessReport(BaseModel):
    """Exactness of Z^a --f--> Z^b --g--> target at the middle term"""
    composite_zero: bool
    image_equals_kernel: bool
    image_finite_index: bool
    index: Optional[int] = None
    surjective: bool
    image_basis: list[list[int]] = Field(default_factory=list)
    kernel_basis: list[list[int]] = Field(default_factory=list)
    witness: Optional[list[int]] = None
    cokernel_factors: list[int] = Field(default_factory=list)
    expected_cokernel_factors: Optional[list[int]] = None

    @property
    def exact(self) -> bool:
        return self.composite_zero and self.image_equals_kernel

    @property
    def cokernel_matches(self) -> Optional[bool]:
        if self.expected_cokernel_factors is None:
            return None
        expected = sorted(d for d in self.expected_cokernel_factors if d != 1)
        return expected == sorted(d for d in self.cokernel_factors if d != 1)

    @property
    def passed(self) -> bool:
        """Exact, surjective, and the cokernel matches when one was expected."""
        return self.exact and self.surjective and self.cokernel_matches is not False


# ═══════════════════════════════════════════════════════════════════════════
# QUOTIENT REPORTS
# ═══════════════════════════════════════════════════════════════════════════

class PairComparison(BaseModel):
    """Computed H^0 dimension of a quotient hom against an expectation"""
    source: str
    target: str
    expected: int = Field(ge=0)
    computed: Optional[int] = None
    trusted: bool = True

    @property
    def matches(self) -> bool:
        return self.trusted and self.computed == self.expected


class ComparisonReport(BaseModel):
    """Quotient homs against an independently known equivalence"""
    depth: int = Field(ge=2)
    contracted: list[str]
    pairs: list[PairComparison] = Field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(p.matches for p in self.pairs)


# ═══════════════════════════════════════════════════════════════════════════
# K-THEORY REPORTS
# ═══════════════════════════════════════════════════════════════════════════

class Verdict(BaseModel):
    """A single lattice-level claim and whether a theorem backs it"""
    name: str
    holds: bool
    theorem_backed: bool
    detail: str = ""
    witnesses: list[list[int]] = Field(default_factory=list)

    @property
    def failed(self) -> bool:
        """A theorem-backed claim that does not hold"""
        return self.theorem_backed and not self.holds


class KermapsReport(BaseModel):
    """Kernel compatibility of i* and q* with the Euler pairings"""
    intersection: Verdict
    q_maps_kernel: Verdict
    q_onto_kernel: Verdict

    @property
    def verdicts(self) -> list[Verdict]:
        return [self.intersection, self.q_maps_kernel, self.q_onto_kernel]

    @property
    def passed(self) -> bool:
        return not any(v.failed for v in self.verdicts)


class Hypotheses(BaseModel):
    """Hypotheses of the numerical exact sequence and their sources"""
    thick: HypothesisSource
    q_preserves_compacts: HypothesisSource
    cokernel_torsion_free: bool

    @property
    def route(self) -> SequenceRoute:
        if self.thick == HypothesisSource.ABSENT:
            return SequenceRoute.HYPOTHESES_UNMET
        if self.q_preserves_compacts != HypothesisSource.ABSENT:
            return SequenceRoute.THEOREM
        if self.cokernel_torsion_free:
            return SequenceRoute.COROLLARY
        return SequenceRoute.HYPOTHESES_UNMET


class SequenceReport(BaseModel):
    """Numerical exact sequence N(I) -> N(A) -> N(Q) -> 0"""
    hypotheses: Hypotheses
    route: SequenceRoute
    ranks: list[int] = Field(description="free ranks of N(I), N(A), N(Q)")
    induced_i: list[list[int]]
    induced_q: list[list[int]]
    exactness: ExactnessReport
    cross_check_factors: list[int]
    quotient_factors: list[int]
    kermaps: KermapsReport

    @property
    def cross_check_matches(self) -> bool:
        return sorted(self.cross_check_factors) == sorted(self.quotient_factors)

    @property
    def theorem_backed(self) -> bool:
        return self.route != SequenceRoute.HYPOTHESES_UNMET

    @property
    def passed(self) -> bool:
        return (
            self.theorem_backed
            and self.exactness.exact
            and self.exactness.surjective
            and self.cross_check_matches
            and self.kermaps.passed
        )


# ═══════════════════════════════════════════════════════════════════════════
# CATEGORY FILES
# ═══════════════════════════════════════════════════════════════════════════

class HomElementSpec(BaseModel):
    """A named basis element of a hom complex"""
    name: str = Field(min_length=1)
    degree: int


class CompositionSpec(BaseModel):
    """Structure constant: left ∘ right = result (right applied first)"""
    left: str
    right: str
    result: dict[str, Coefficient] = Field(default_factory=dict)


class ArrowSpec(BaseModel):
    """A quiver arrow; degree defaults to 0"""
    name: str = Field(min_length=1)
    source: str
    target: str
    degree: int = 0

    @field_validator("name")
    @classmethod
    def validate_name(cls, v: str) -> str:
        if "*" in v or v.startswith("id_"):
            raise ValueError(f"arrow name {v!r} may not contain '*' or start with 'id_'")
        return v


class QuiverSpec(BaseModel):
    """Quiver with relations; paths are written in composition order, joined by '*'"""
    vertices: list[str] = Field(min_length=1)
    arrows: list[ArrowSpec] = Field(default_factory=list)
    relations: list[dict[str, Coefficient]] = Field(default_factory=list)
    path_length_cap: Optional[int] = Field(default=None, ge=1)


class CategorySpecFile(BaseModel):
    """A DG category given by explicit bases or by a quiver"""
    field: str = "Q"
    objects: Optional[list[str]] = None
    homs: Optional[dict[str, list[HomElementSpec]]] = None
    identities: dict[str, str] = Field(default_factory=dict)
    differential: dict[str, dict[str, Coefficient]] = Field(default_factory=dict)
    composition: list[CompositionSpec] = Field(default_factory=list)
    quiver: Optional[QuiverSpec] = None

    @field_validator("field")
    @classmethod
    def validate_field(cls, v: str) -> str:
        if v != "Q" and not v.startswith("Fp:"):
            raise ValueError(f"field must be 'Q' or 'Fp:<prime>', got {v!r}")
        return v

    @model_validator(mode="after")
    def exactly_one_source(self) -> "CategorySpecFile":
        explicit = self.homs is not None or bool(self.composition)
        if explicit == (self.quiver is not None):
            raise ValueError("exactly one of homs/composition or quiver must be present")
        if explicit and self.objects is None:
            raise ValueError("objects are required alongside homs")
        return self


# ═══════════════════════════════════════════════════════════════════════════
# TRIPLE AND LATTICE FILES
# ═══════════════════════════════════════════════════════════════════════════

class TripleFlags(BaseModel):
    """User-asserted hypotheses"""
    thick: bool = False
    q_preserves_compacts: bool = False


class K0Data(BaseModel):
    """Explicit K_0 data: Gram matrices and the maps i*, q*"""
    gram_I: list[list[int]]
    gram_A: list[list[int]]
    gram_Q: list[list[int]]
    i_star: list[list[int]]
    q_star: list[list[int]]
    serre_I: Optional[list[list[int]]] = None
    serre_A: Optional[list[list[int]]] = None
    serre_Q: Optional[list[list[int]]] = None
    quotient_relations: list[list[int]] = Field(
        default_factory=list, description="generators of the relation lattice of K_0(Q)"
    )
    expected_coker: Optional[list[int]] = Field(
        default=None, description="invariant factors expected for coker(i*), 0 for free summands"
    )

    @model_validator(mode="after")
    def validate_shapes(self) -> "K0Data":
        n_i, n_a, n_q = len(self.gram_I), len(self.gram_A), len(self.gram_Q)
        for name, g, n in (("gram_I", self.gram_I, n_i), ("gram_A", self.gram_A, n_a),
                           ("gram_Q", self.gram_Q, n_q)):
            if any(len(row) != n for row in g):
                raise ValueError(f"{name} must be square")
        if len(self.i_star) != n_a or any(len(row) != n_i for row in self.i_star):
            raise ValueError(f"i_star must be {n_a}x{n_i}")
        if len(self.q_star) != n_q or any(len(row) != n_a for row in self.q_star):
            raise ValueError(f"q_star must be {n_q}x{n_a}")
        if any(len(r) != n_q for r in self.quotient_relations):
            raise ValueError(f"quotient relations must have length {n_q}")
        return self


class TripleSpecFile(BaseModel):
    """A base category with a contracted subcategory, or bare K_0 data"""
    category: Optional[CategorySpecFile] = None
    category_path: Optional[str] = None
    contract: list[str] = Field(default_factory=list)
    depth: int = Field(default=3, ge=2)
    k0: Optional[K0Data] = None
    flags: TripleFlags = Field(default_factory=TripleFlags)
    expected_h0: dict[str, int] = Field(
        default_factory=dict, description="'a->b' to expected H^0 dimension of the quotient"
    )

    @model_validator(mode="after")
    def validate_sources(self) -> "TripleSpecFile":
        if self.category is not None and self.category_path is not None:
            raise ValueError("give either category or category_path, not both")
        if self.category is None and self.category_path is None and self.k0 is None:
            raise ValueError("a triple needs a category or explicit k0 data")
        return self

    @property
    def has_category(self) -> bool:
        return self.category is not None or self.category_path is not None


class LatticeSpecFile(BaseModel):
    """An Euler lattice given directly by its Gram matrix"""
    gram: list[list[int]]
    serre: Optional[list[list[int]]] = None

    @field_validator("gram")
    @classmethod
    def validate_square(cls, v: list[list[int]]) -> list[list[int]]:
        if any(len(row) != len(v) for row in v):
            raise ValueError("gram must be square")
        return v


class MatrixSpecFile(BaseModel):
    """An integer matrix, for Smith normal forms"""
    matrix: list[list[int]]

    @field_validator("matrix")
    @classmethod
    def validate_rectangular(cls, v: list[list[int]]) -> list[list[int]]:
        if v and any(len(row) != len(v[0]) for row in v):
            raise ValueError("matrix rows must have equal length")
        return v
