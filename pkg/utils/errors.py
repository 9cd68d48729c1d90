"""Exception types raised for malformed input and impossible arithmetic.

Failed identities are never raised: they are recorded in a Report.
"""


class QHAError(Exception):
    """Base class for every error raised by the kernel."""


class SignatureMismatchError(QHAError):
    """Two tensors (or a tensor and a map) disagree on legs, dims or spaces."""


class UnknownSpaceError(QHAError):
    """A space_id has no algebra in the registry."""


class LegIndexError(QHAError):
    """A leg position is out of range or repeated."""


class SingularElementError(QHAError):
    """An element or linear map that must be invertible is not."""


class StructureError(QHAError):
    """Structure data contradicts an invariant needed to continue a build."""


class SpecFileError(QHAError):
    """An input file cannot be parsed or violates a load-time invariant."""

    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")
