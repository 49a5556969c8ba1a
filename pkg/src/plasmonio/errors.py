"""Exceptions raised by the physics modules.

Every error derives from :class:`PhysicsError`, so the command-line layer
can map the whole family onto a single exit status.
"""


class PhysicsError(Exception):
    """Base class for domain errors (bad physics, not bad input syntax)."""


class NoBoundState(PhysicsError):
    pass


class GridTooCoarse(PhysicsError):
    pass


class NonPositiveSpectrum(PhysicsError):
    pass


class AngleOutOfRange(PhysicsError, ValueError):
    pass


class LightConePoint(PhysicsError, ValueError):
    """Raised when a quantity is requested exactly on the light cone."""


class QuadratureNotConverged(PhysicsError):
    pass


class HalfMaxNotBracketed(PhysicsError):
    pass
