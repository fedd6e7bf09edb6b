"""Exception types shared across the package."""


class MilnorEigError(Exception):
    """Base class for every error this package raises on purpose."""


class InvalidOrderError(MilnorEigError, ValueError):
    """A root-of-unity order was zero or otherwise unusable."""


class InvalidInputError(MilnorEigError, ValueError):
    """An argument violates a documented precondition."""


class NotReducedError(MilnorEigError, ValueError):
    """The defining polynomial has a repeated (proportional) factor or is zero."""


class NonHomogeneousError(MilnorEigError, ValueError):
    """A sum of powers mixes exponents, so the polynomial is not homogeneous."""


class UnsupportedShapeError(MilnorEigError, ValueError):
    """The input is a polynomial shape the calculator does not handle."""


class UnsupportedDimensionError(MilnorEigError, ValueError):
    """An arrangement lives in an ambient dimension without an eigentable rule."""


class InternalConsistencyError(MilnorEigError, RuntimeError):
    """Two routes that must agree produced different answers; this is a bug."""


class NotGroupableError(MilnorEigError, ValueError):
    """A product of linear factors is not a product of cyclotomic bundles.

    The part that could not be grouped is attached as ``residue``.
    """

    def __init__(self, message, residue):
        super().__init__(message)
        self.residue = residue


class ParseError(MilnorEigError, ValueError):
    """The expression text is malformed; ``position`` is the 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (offset {position})")
        self.position = position
