"""Shared error types and the violation record used by all verification reports."""

from __future__ import annotations

import dataclasses


@dataclasses.dataclass(frozen=True)
class Violation:
    """One failed axiom check: the axiom's name and a concrete witness tuple."""

    axiom: str
    witness: tuple

    def text(self) -> str:
        return f"AXIOM {self.axiom} WITNESS {self.witness}"


class SchemeForgeError(ValueError):
    """Base class for contract violations raised by this package."""


class SizeGuardError(SchemeForgeError):
    """An enumeration was refused because the input exceeds its hard size bound."""


class TriangleConditionError(SchemeForgeError):
    """A valued ring failed the triangle condition required for its distance scheme."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__(f"triangle condition fails: {self.violations[0].text()}")


class CongruenceError(SchemeForgeError):
    """A block partition is not a congruence relation; carries a witness."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__(f"not a congruence relation: {self.violations[0].text()}")


class GeometryError(SchemeForgeError):
    """Extracted point/line data violates the incidence-geometry axioms."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__(f"geometry axiom fails: {self.violations[0].text()}")
