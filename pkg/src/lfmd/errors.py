class LfmdError(Exception):
    """Base class for library errors."""


class InvalidInputError(LfmdError, ValueError):
    pass


class InvalidFamilyError(InvalidInputError):
    """Family parameters fail the family's predicate."""


class EmptyGraphError(InvalidInputError):
    """The requested construction has no vertices."""


class NotAdjacentError(InvalidInputError):
    pass


class NoEdgesError(InvalidInputError):
    pass


class CapacityError(LfmdError):
    """Instance exceeds a configured size cap."""
