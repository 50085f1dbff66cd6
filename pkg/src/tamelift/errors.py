"""Exception types shared across the package."""
from __future__ import annotations


class TameliftError(Exception):
    """Base class for all domain errors raised by this package."""


class DatumValidationError(TameliftError):
    """A root datum violates one of its structural invariants.

    `invariant` carries a short machine-readable name of the failed check.
    """

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class ChamberMismatchError(TameliftError):
    """Two cocharacters were required to share an open chamber but do not."""


class InvalidPairError(TameliftError):
    """An inertial pair fails the Frobenius compatibility congruence."""


class GuardError(TameliftError):
    """An enumeration was requested beyond its configured desk-scale guard."""


class LiftHypothesisError(TameliftError):
    """A lift was requested for a Weyl element whose f-th power is not 1."""


class InternalConsistencyError(TameliftError):
    """A re-verification that must hold by construction failed."""


class MultisetDivisionError(TameliftError):
    """Multiset division requested with a non-dividing multiplicity."""
