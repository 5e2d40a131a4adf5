"""
DGKIT CONTRACTS PACKAGE

Central export point for schemas, interfaces and errors.

Usage:
    from src.contracts import ValidationReport, ExactnessReport, TripleSpecFile
    from src.contracts import IDGCategory, IModule
    from src.contracts import DGKitError, TrustWindowError
"""

# ═══════════════════════════════════════════════════════════════════════════
# SCHEMAS — Pydantic models
# ═══════════════════════════════════════════════════════════════════════════

from .schemas import (
    # Enums
    Axiom,
    PerfectnessStatus,
    HypothesisSource,
    SequenceRoute,
    Provenance,
    # Reports
    AxiomViolation,
    ValidationReport,
    ExactnessReport,
    PairComparison,
    ComparisonReport,
    Verdict,
    KermapsReport,
    Hypotheses,
    SequenceReport,
    # Input files
    Coefficient,
    HomElementSpec,
    CompositionSpec,
    ArrowSpec,
    QuiverSpec,
    CategorySpecFile,
    TripleFlags,
    K0Data,
    TripleSpecFile,
    LatticeSpecFile,
    MatrixSpecFile,
    CHI_CONVENTION,
)

# ═══════════════════════════════════════════════════════════════════════════
# INTERFACES — Abstract Base Classes
# ═══════════════════════════════════════════════════════════════════════════

from .interfaces import IDGCategory, IModule

# ═══════════════════════════════════════════════════════════════════════════
# ERRORS
# ═══════════════════════════════════════════════════════════════════════════

from .errors import (
    DGKitError,
    ShapeMismatchError,
    RankMismatchError,
    DegreeWindowError,
    UnknownObjectError,
    QuiverError,
    MaurerCartanError,
    DGAxiomError,
    DepthError,
    TrustWindowError,
    SerreError,
    KernelMismatchError,
    SpecSyntaxError,
    SpecSchemaError,
)

# ═══════════════════════════════════════════════════════════════════════════
# VERSION
# ═══════════════════════════════════════════════════════════════════════════

__version__ = "0.1.0"

__all__ = [
    # Schemas
    "Axiom",
    "PerfectnessStatus",
    "HypothesisSource",
    "SequenceRoute",
    "Provenance",
    "AxiomViolation",
    "ValidationReport",
    "ExactnessReport",
    "PairComparison",
    "ComparisonReport",
    "Verdict",
    "KermapsReport",
    "Hypotheses",
    "SequenceReport",
    "Coefficient",
    "HomElementSpec",
    "CompositionSpec",
    "ArrowSpec",
    "QuiverSpec",
    "CategorySpecFile",
    "TripleFlags",
    "K0Data",
    "TripleSpecFile",
    "LatticeSpecFile",
    "MatrixSpecFile",
    "CHI_CONVENTION",
    # Interfaces
    "IDGCategory",
    "IModule",
    # Errors
    "DGKitError",
    "ShapeMismatchError",
    "RankMismatchError",
    "DegreeWindowError",
    "UnknownObjectError",
    "QuiverError",
    "MaurerCartanError",
    "DGAxiomError",
    "DepthError",
    "TrustWindowError",
    "SerreError",
    "KernelMismatchError",
    "SpecSyntaxError",
    "SpecSchemaError",
]
