"""
DGKIT ERRORS

Exception hierarchy shared by every package.

Mathematical failures found by validators and verifiers are reported through
report models, never raised. The exceptions below signal inputs that an
operation cannot work with at all.
"""

from __future__ import annotations

from typing import Optional, Any


# ═══════════════════════════════════════════════════════════════════════════
# BASE
# ═══════════════════════════════════════════════════════════════════════════

class DGKitError(Exception):
    """Base class for all toolkit errors."""
    pass


# ═══════════════════════════════════════════════════════════════════════════
# LINEAR ALGEBRA
# ═══════════════════════════════════════════════════════════════════════════

class ShapeMismatchError(DGKitError):
    """Raised when matrix shapes are not composable."""
    pass


class RankMismatchError(DGKitError):
    """Raised when sublattices live in different ambient ranks."""
    pass


# ═══════════════════════════════════════════════════════════════════════════
# CATEGORIES AND COMPLEXES
# ═══════════════════════════════════════════════════════════════════════════

class DegreeWindowError(DGKitError):
    """Raised when a construction would leave its declared degree window."""
    pass


class UnknownObjectError(DGKitError):
    """Raised when an object label is not part of a category."""
    pass


class QuiverError(DGKitError):
    """Raised for malformed relations or homs that do not stabilize."""
    pass


class MaurerCartanError(DGKitError):
    """Raised when a twist fails the Maurer-Cartan equation or one-sidedness."""
    pass


class DGAxiomError(DGKitError):
    """Raised when a parsed category violates the DG axioms."""

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


# ═══════════════════════════════════════════════════════════════════════════
# QUOTIENTS
# ═══════════════════════════════════════════════════════════════════════════

class DepthError(DGKitError):
    """Raised when a Drinfeld quotient is requested with depth < 2."""
    pass


class TrustWindowError(DGKitError):
    """Raised when a requested degree lies outside the trust window."""
    pass


# ═══════════════════════════════════════════════════════════════════════════
# K-THEORY
# ═══════════════════════════════════════════════════════════════════════════

class SerreError(DGKitError):
    """Raised when a Serre matrix cannot be computed or is inconsistent."""
    pass


class KernelMismatchError(DGKitError):
    """Raised when χ-kernels disagree or a map does not preserve them."""

    def __init__(self, message: str, witness: Optional[list[int]] = None):
        super().__init__(message)
        self.witness = witness


# ═══════════════════════════════════════════════════════════════════════════
# INPUT FILES
# ═══════════════════════════════════════════════════════════════════════════

class SpecSyntaxError(DGKitError):
    """Raised when a spec file is not well-formed JSON."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SpecSchemaError(DGKitError):
    """Raised when a spec file violates a schema rule."""

    def __init__(self, message: str, rule: str):
        super().__init__(f"[{rule}] {message}")
        self.rule = rule
