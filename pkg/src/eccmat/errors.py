"""Exception types shared across the package."""


class EccmatError(Exception):
    """Base class for every error raised by this package."""


class DisconnectedGraph(EccmatError):
    """The operation is only defined for connected graphs."""


class NotSymmetric(EccmatError):
    """A symmetric matrix was required."""


class NonConvergence(EccmatError):
    """The iterative eigensolver exhausted its sweep budget."""

    def __init__(self, sweeps: int):
        super().__init__(f"eigensolver did not converge within {sweeps} sweeps")
        self.sweeps = sweeps


class MalformedGraph6(EccmatError):
    """The input is not a valid single-line graph6 record."""


class SizeLimitExceeded(EccmatError):
    """The input is larger than this operation is designed to handle."""


class InvalidPartition(EccmatError):
    """Classes must be nonempty, disjoint and cover all indices."""


class NotEquitable(EccmatError):
    """The partition attached to a quotient matrix is not equitable."""


class InvalidParameters(EccmatError):
    """Family parameters are out of range."""


class InvalidType(InvalidParameters):
    """A mixed-extension type tuple contains a zero entry or is empty."""


class UnsupportedShape(EccmatError):
    """No closed form is known for this type-tuple shape."""


class ZeroPolynomial(EccmatError):
    """The zero polynomial is not a valid argument here."""


class DivisionByZeroPolynomial(ZeroPolynomial):
    """Polynomial division by the zero polynomial."""
