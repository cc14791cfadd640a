"""Exception types shared across the package."""


class HopfcheckError(Exception):
    """Base class for all errors raised by this package."""


class CompositionError(HopfcheckError):
    """Raised when 1- or 2-cells are glued along mismatched boundaries."""


class ShapeError(HopfcheckError):
    """Raised when 2-cell data does not fit its stated source/target."""


class CoherenceError(HopfcheckError):
    """Raised when no canonical comparison exists between two chains."""


class ValidationError(HopfcheckError):
    """Raised when algebraic input data fails an axiom check.

    Carries a human-readable message naming the failing axiom and, when
    available, a witness tuple in ``witness``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BackendError(HopfcheckError):
    """Raised for invalid backend parameters (empty carrier, n = 0, ...)."""


class InternalCheckError(HopfcheckError):
    """Raised when two independent computation paths disagree.

    This always indicates a bug in the engine, never bad input.
    """
