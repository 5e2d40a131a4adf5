"""
DGKIT INTERFACES — Abstract base classes for categories and modules.

DGCategory and QuotientCategory implement IDGCategory; every module over a
category (representable, restricted, realized from a twisted complex)
implements IModule. The perfect and ktheory packages only talk to these.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from src.lattice.field import CoefficientField, FieldMatrix, SparseVector
    from src.contracts.schemas import ValidationReport
    from src.dgcat.complex import Complex
    from src.dgcat.category import BasisElement


# ═══════════════════════════════════════════════════════════════════════════
# CATEGORIES
# ═══════════════════════════════════════════════════════════════════════════

class IDGCategory(ABC):
    """
    A finite DG category with named bases.

    Elements of Hom(a, b) are sparse vectors over the basis of that hom.
    Composition is written compose(g, f) = g ∘ f with f applied first.
    """

    @property
    @abstractmethod
    def field(self) -> "CoefficientField":
        pass

    @property
    @abstractmethod
    def objects(self) -> tuple[str, ...]:
        pass

    @abstractmethod
    def hom(self, a: str, b: str) -> "Complex":
        """The hom complex Hom(a, b)."""
        pass

    @abstractmethod
    def basis(self, a: str, b: str) -> tuple["BasisElement", ...]:
        """Named, graded basis of Hom(a, b)."""
        pass

    def degrees(self, a: str, b: str) -> tuple[int, ...]:
        return tuple(e.degree for e in self.basis(a, b))

    def dim(self, a: str, b: str) -> int:
        return len(self.basis(a, b))

    def format_element(self, a: str, b: str, x: "SparseVector") -> str:
        """Human-readable linear combination of basis names."""
        if not x:
            return "0"
        names = self.basis(a, b)
        return " + ".join(
            f"{self.field.to_string(c)}*{names[i].name}" for i, c in sorted(x.items())
        )

    @abstractmethod
    def d(self, a: str, b: str, x: "SparseVector") -> "SparseVector":
        """Differential of an element of Hom(a, b)."""
        pass

    @abstractmethod
    def compose(self, a: str, b: str, c: str,
                g: "SparseVector", f: "SparseVector") -> "SparseVector":
        """g ∘ f for f in Hom(a, b) and g in Hom(b, c)."""
        pass

    @abstractmethod
    def identity(self, a: str) -> "SparseVector":
        pass

    @abstractmethod
    def validate(self) -> "ValidationReport":
        """Check d² = 0, Leibniz, associativity and units; never raises."""
        pass


# ═══════════════════════════════════════════════════════════════════════════
# MODULES
# ═══════════════════════════════════════════════════════════════════════════

class IModule(ABC):
    """
    A right DG module: a ↦ complex M_a with actions M_b → M_a for f: a → b.
    """

    @property
    @abstractmethod
    def category(self) -> IDGCategory:
        pass

    @abstractmethod
    def fiber(self, a: str) -> "Complex":
        pass

    @abstractmethod
    def action(self, a: str, b: str, index: int) -> "FieldMatrix":
        """Matrix of m ↦ m·e for the basis element e = index of Hom(a, b)."""
        pass

    @abstractmethod
    def validate(self) -> "ValidationReport":
        """Check associativity, unit and Leibniz of the action; never raises."""
        pass
