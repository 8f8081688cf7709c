"""Exception types raised by the densecap library."""


class DensecapError(Exception):
    """Base class for all densecap errors."""


class NonHermitianInput(DensecapError, ValueError):
    """Matrix expected to be Hermitian is not, beyond tolerance."""


class NoConvergence(DensecapError, RuntimeError):
    """Iterative routine exhausted its budget without converging."""


class BadDimension(DensecapError, ValueError):
    """Matrix has the wrong shape for the requested operation."""


class NonUnitary(DensecapError, ValueError):
    """Matrix expected to be unitary is not, beyond tolerance."""


class NotNormalized(DensecapError, ValueError):
    """Amplitude pair is not normalized."""


class OutOfRange(DensecapError, ValueError):
    """Family parameter lies outside its admissible range."""


class NotASimplex(DensecapError, ValueError):
    """Probability vector is not a valid simplex point."""


class InvalidState(DensecapError, ValueError):
    """Matrix fails the density-matrix invariants."""


class NotPure(DensecapError, ValueError):
    """State is not pure within tolerance."""


class NotBellDiagonal(DensecapError, ValueError):
    """State is not diagonal in the Bell basis within tolerance."""


class EntropyTooHigh(DensecapError, ValueError):
    """State entropy exceeds the regime where the formula applies."""
