"""Exception types shared across the package."""


class MinsurfError(Exception):
    """Base class for all package errors."""


class DegenerateMetric(MinsurfError):
    """EG - F^2 <= 0 somewhere: the sampling is not an immersion."""


class StepTooLarge(MinsurfError):
    """A normal offset destroyed the immersion property."""


class NotMinimal(MinsurfError):
    """Operation requires a (numerically) minimal input surface."""


class UnknownPreset(MinsurfError):
    pass


class PathOutsideDomain(MinsurfError):
    pass


class SingularityOnPath(MinsurfError):
    """Gauss-map data left the admissible range along an integration path."""


class NoConvergence(MinsurfError):
    """Newton iteration failed to reach the residual tolerance."""


class StabilityViolation(MinsurfError):
    """Explicit time step exceeds the CFL-type stability guard."""


class BlowUp(MinsurfError):
    """Flow solution exceeded the blow-up threshold."""


class PastExtinction(MinsurfError):
    pass


class InsufficientDomain(MinsurfError):
    """Trace does not cover the time interval or spatial ball required."""


class NotSubharmonic(MinsurfError):
    pass


class BadSector(MinsurfError):
    pass


class GridMisaligned(MinsurfError):
    """2*pi is not an integer multiple of the angular spacing."""


class SignChange(MinsurfError):
    """Separation changes sign, so log-based estimates do not apply."""


class SectorTooSmall(MinsurfError):
    pass


class NonFiniteSamples(MinsurfError):
    pass


class OutOfRange(MinsurfError):
    pass


class WindowOutOfRange(MinsurfError):
    pass


class HypothesisViolated(MinsurfError):
    """A measured hypothesis of an estimate fails; message names the inequality."""


class NegativeEigenvalue(MinsurfError):
    pass


class ZeroField(MinsurfError):
    pass


class UsageError(MinsurfError):
    pass


class IoError(MinsurfError):
    pass
