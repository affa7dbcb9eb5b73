"""Exception types shared across the package."""


class HomPoissonError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(HomPoissonError, ValueError):
    """Operands have incompatible dimensions."""


class SingularMatrixError(HomPoissonError, ValueError):
    """A linear map that was required to be invertible is not."""


class GeneratorMismatch(HomPoissonError, ValueError):
    """Polynomials over different generator lists were combined."""


class ResourceLimitError(HomPoissonError, RuntimeError):
    """A computation was refused because it exceeds the desk-scale guards."""


class PreconditionError(HomPoissonError, ValueError):
    """A construction's mathematical precondition failed.

    Carries the failed CheckReport (if any) in ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SpecFileError(HomPoissonError, ValueError):
    """An algebra or map file is malformed; message names file and field."""
