"""Exception types shared across the package."""


class OrbitError(Exception):
    """Base class for domain errors raised by the analysis routines."""


class UniformPattern(OrbitError):
    """The pattern uses only one of the two symbols, so the operation is undefined."""


class NotBlockDecomposable(OrbitError):
    """The pattern mixes LL and RR adjacencies and has no single-block covering."""


class DegenerateConstraint(OrbitError):
    """A positional inequality lost its mu term and is violated outright."""


class NotCoprime(OrbitError):
    """The requested symbol count does not generate an admissible pattern."""


class CeilingExceeded(OrbitError):
    """Brute-force enumeration was asked for a period above the configured cap."""


class NotMolecular(OrbitError):
    """mu does not lie in the requested mixed-block band."""


class OutOfOrbitRange(OrbitError):
    """No periodic orbit exists for this mu (left the open unit range, possibly
    after renormalization)."""


class DepthExceeded(OrbitError):
    """The renormalization descent did not resolve within the depth limit."""
