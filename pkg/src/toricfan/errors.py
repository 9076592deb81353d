"""Exception hierarchy.

Every domain error is its own class so that ``type(err).__name__`` is a
stable string the CLI can print and scripts can match on.
"""


class ToricError(Exception):
    """Base class for all domain errors raised by this package."""


# lattice
class ZeroVector(ToricError):
    pass


# fan validation
class NonPrimitiveRay(ToricError):
    pass


class DuplicateRay(ToricError):
    pass


class NotUnimodular(ToricError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"adjacent determinant != 1 at index {index}")


class NotComplete(ToricError):
    pass


class TooFewRays(ToricError):
    pass


class ClockwiseFan(ToricError):
    """Rays wind clockwise; reverse ray order and validate again."""


# fan surgery
class IndexOutOfRange(ToricError):
    pass


class NotContractible(ToricError):
    pass


# classification / stabilization
class IsProjectivePlane(ToricError):
    pass


class CapExceeded(ToricError):
    pass


class MissingAxisRays(ToricError):
    pass


# polytopes
class NotAmple(ToricError):
    pass


class EmptyPolytope(ToricError):
    pass


class InterpolationInconsistent(ToricError):
    pass


# file formats
class ParseError(ToricError):
    pass
