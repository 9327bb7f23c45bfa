"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the domain of the operation."""


class InadmissibleWordError(DomainError):
    """A side word contains a step that no perpendicular can take."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class ResourceCapError(RuntimeError):
    """A brute-force enumeration would exceed its configured size cap."""


class ConvergenceError(RuntimeError):
    """Fixed-point iteration ran out of iterations."""

    def __init__(self, message, last, gap):
        super().__init__(message)
        self.last = last
        self.gap = gap


class SingularMapError(ArithmeticError):
    """A return map has slope 1 and no unique fixed point."""
