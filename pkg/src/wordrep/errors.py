"""Exception types shared across the package."""


class WordRepError(Exception):
    pass


class InvalidArgumentsError(WordRepError, ValueError):
    pass


class OutOfRangeError(WordRepError, IndexError):
    pass


class CapacityError(WordRepError):
    """Raised when an enumeration would exceed its size guard."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class DegenerateModelError(WordRepError, ValueError):
    pass
