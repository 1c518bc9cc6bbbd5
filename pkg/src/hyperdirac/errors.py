"""Exception hierarchy.

Every error raised by the package derives from :class:`HyperDiracError`,
which is itself a ``ValueError`` so callers validating inputs can catch
the builtin.
"""


class HyperDiracError(ValueError):
    """Base class for all package errors."""


class SeriesConvergenceError(HyperDiracError):
    """Gauss series did not converge within the term budget."""


class GammaPoleError(HyperDiracError):
    """Lower hypergeometric parameter hits a pole of the series."""


class NonTerminatingError(HyperDiracError):
    """A terminating (polynomial) evaluation was requested for a non-terminating series."""


class AxisDegeneracyError(HyperDiracError):
    """Quantity involving 1/sinh r requested on the symmetry axis r = 0."""


class SubluminalEnergyError(HyperDiracError):
    """|epsilon| < M, so the axial momentum p would be imaginary."""


class DegenerateSeparationError(HyperDiracError):
    """Separating constant lambda = 0."""


class InadmissibleError(HyperDiracError):
    """Quantum number or exponent choice outside its admissible range."""


class ComplexRootError(HyperDiracError):
    """lambda^2 > B^2: the radial square root sqrt(B^2 - lambda^2) is not real."""


class LevelOutsideWellError(HyperDiracError):
    """Radial level violates the finiteness inequality at infinity."""
