"""Exception types raised across the package."""


class NutGraphError(Exception):
    """Base class for all errors raised by nutgraphs."""


class InvalidInputError(NutGraphError, ValueError):
    pass


class DimensionError(NutGraphError, ValueError):
    pass


class InvalidSpecError(NutGraphError, ValueError):
    pass


class InvalidPartitionError(NutGraphError, ValueError):
    pass


class RejectedMoveError(NutGraphError, ValueError):
    """A rewiring move violated a precondition; ``pair`` names the offender."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class ParseError(NutGraphError, ValueError):
    """Malformed graph text. ``offset`` is a byte offset, ``vertex`` a vertex label."""

    def __init__(self, message, offset=None, vertex=None):
        super().__init__(message)
        self.offset = offset
        self.vertex = vertex


class PreconditionError(NutGraphError, ValueError):
    pass


class IntegrityError(NutGraphError, RuntimeError):
    """Embedded fixture data failed to load or validate."""
