"""Exception hierarchy, mapped to CLI exit codes by cli.py."""


class HopfDeformError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class SchemaError(HopfDeformError):
    """Malformed input document or configuration."""

    exit_code = 2


class PreconditionError(HopfDeformError):
    """A mathematical hypothesis of the requested construction fails."""

    exit_code = 3


class ObstructionError(HopfDeformError):
    """A cobounding solve has no solution; carries the residual class."""

    exit_code = 4

    def __init__(self, message, residual=None, order=None):
        super().__init__(message)
        self.residual = residual
        self.order = order


class InternalAssertionError(HopfDeformError):
    """A symmetry the construction relies on failed; signals convention drift."""

    exit_code = 5


class DegreeCapError(HopfDeformError):
    """A product would exceed the configured total-degree cap."""

    exit_code = 5


class VerificationError(HopfDeformError):
    """Certificate re-verification failed; names the first failing identity."""

    exit_code = 1

    def __init__(self, message, identity=None, h_order=None):
        super().__init__(message)
        self.identity = identity
        self.h_order = h_order
