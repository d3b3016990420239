"""Exception hierarchy shared by every module of the package."""


class HyperringError(Exception):
    """Base class for all errors raised by :mod:`krasner`."""


class StructureError(HyperringError, ValueError):
    """A table is malformed: ragged arrays, empty cells, indices out of range."""


class AxiomError(HyperringError):
    """An operation needed an axiom that the table does not satisfy."""


class CapacityError(HyperringError):
    """The carrier is larger than an enumeration is allowed to handle."""


class DomainError(HyperringError, ValueError):
    """An argument is outside the domain of the operation (e.g. improper ideal)."""


class ConstructionError(HyperringError, ValueError):
    """A builder was given inputs from which no valid hyperring can be built."""


class HomomorphismError(HyperringError, ValueError):
    """A map fails the good-homomorphism conditions."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConsistencyError(HyperringError, AssertionError):
    """An internal invariant (e.g. cosets partitioning the carrier) failed."""
