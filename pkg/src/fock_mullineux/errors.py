"""Exception types shared across the package."""


class FockError(ValueError):
    """Base class for all errors raised by this package."""


class PartitionParseError(FockError):
    """Partition text does not follow the grammar."""


class ParameterError(FockError):
    """A modulus, level or operator is invalid for the requested computation."""


class DomainError(FockError):
    """The input lies outside the domain of a map (e.g. a d-singular partition)."""


class InvariantError(FockError):
    """An internal consistency check failed; indicates a bug or a false theorem."""
