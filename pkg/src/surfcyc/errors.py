"""Exception hierarchy shared by all modules."""


class SurfaceError(Exception):
    """Base class for every error raised by surfcyc."""


class MalformedPermutation(SurfaceError):
    pass


class NegativeWeight(SurfaceError):
    pass


class Disconnected(SurfaceError):
    pass


class NonOrientable(SurfaceError):
    pass


class NotSimple(SurfaceError):
    pass


class NotEmbeddedWalk(SurfaceError):
    pass


class NotBoundary(SurfaceError):
    pass


class HasBoundary(SurfaceError):
    pass


class NoBoundary(SurfaceError):
    pass


class Unreachable(SurfaceError):
    pass


class TooFewBoundaries(SurfaceError):
    pass


class Separating(SurfaceError):
    pass


class NotCycle(SurfaceError):
    pass


class OutOfRange(SurfaceError):
    pass


class BasepointMismatch(SurfaceError):
    pass


class NoSuchCycle(SurfaceError):
    """No cycle of the requested class exists (or all candidates are infinite)."""


class GenusZero(NoSuchCycle):
    """Genus zero after pasting disks: every cycle separates."""


class AsymmetricWeights(SurfaceError):
    pass


class TooLarge(SurfaceError):
    pass


class FormatError(SurfaceError):
    pass
