"""Exception types shared across the package."""


class ToricPolarError(Exception):
    """Base class for all package-specific errors."""


class ParseError(ToricPolarError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PreconditionError(ToricPolarError, ValueError):
    """An operation was called on input violating its contract."""


class SpecializationError(ToricPolarError):
    """Randomized modular computation hit an unlucky specialization.

    Signals either disagreement between independent trials or a slice of
    unexpected dimension.  Rerunning with a fresh seed (or another prime)
    is the intended recovery.
    """

    def __init__(self, message: str, seeds: tuple = ()):
        if seeds:
            message = f"{message} [seeds: {', '.join(map(str, seeds))}]"
        super().__init__(message)
        self.seeds = tuple(seeds)
