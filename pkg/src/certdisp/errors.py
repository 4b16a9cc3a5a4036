"""Exception hierarchy shared by the solvers and the CLI."""


class CertDispError(ValueError):
    """Base class for all errors raised by this package."""


class GraphError(CertDispError):
    """Malformed graph or request data, or a structural precondition failed."""


class DisconnectedError(CertDispError):
    """Vertices that must be joined lie in different components."""


class CapExceededError(CertDispError):
    """An exact method was asked to run beyond its configured size cap."""


class UnsupportedInstanceError(CertDispError):
    """No solver handles this instance class."""
