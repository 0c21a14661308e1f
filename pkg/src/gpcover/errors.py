"""Exception hierarchy shared by all modules."""


class GPCoverError(ValueError):
    """Base class for every error raised by this package."""


class EmptyPart(GPCoverError):
    pass


class OverlappingParts(GPCoverError):
    pass


class InvalidArity(GPCoverError):
    pass


class OddProfile(GPCoverError):
    pass


class TooSmall(GPCoverError):
    pass


class GroundSetOverlap(GPCoverError):
    pass


class ArityMismatch(GPCoverError):
    pass


class MissingDependency(GPCoverError):
    pass


class NotFound(GPCoverError):
    pass


class DomainError(GPCoverError):
    pass


class BudgetExceeded(GPCoverError):
    """Raised only by callers that want a hard failure; the search itself
    returns a non-exhausted result instead."""
