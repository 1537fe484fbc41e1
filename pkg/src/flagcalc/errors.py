"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input is outside the mathematical domain of an operation."""


class ParseError(DomainError):
    """A diagram, mark-set, or tag string does not match the grammar."""
