"""Shared exception types.

Parse/format problems raise ValueError; everything below signals a
violated mathematical precondition or a resource cap.
"""


class PathCrystalError(Exception):
    """Base class for domain errors."""


class InfiniteSupport(PathCrystalError):
    """Support requested for a weight with nonzero eventual value."""


class NonzeroLevel(PathCrystalError):
    """A level-zero weight was required."""


class NotInEW(PathCrystalError):
    """Weight is not a signed rearrangement of a partition."""


class NegativeLevel(PathCrystalError):
    """A nonnegative level was required."""


class NotInLdom(PathCrystalError):
    """Weight is not truncation-dominant with constant coordinates beyond the rank."""


class OrbitTooLarge(PathCrystalError):
    """Weyl orbit exceeded the size cap."""


class NotInOrbit(PathCrystalError):
    """The two weights lie in different Weyl orbits."""


class NonIntegralWeight(PathCrystalError):
    """Path endpoint is not an integral weight."""


class SizeCap(PathCrystalError):
    """Crystal generation exceeded the size cap."""


class PreconditionViolated(PathCrystalError):
    """A stated theorem hypothesis does not hold for these arguments."""


class CollisionError(PathCrystalError):
    """Flipped column parameters collided; input outside the valid regime."""


class LengthExceeded(PathCrystalError):
    """Partition has more parts than the rank allows."""


class UnsupportedCase(PathCrystalError):
    """Input class not covered by any implemented product formula."""
