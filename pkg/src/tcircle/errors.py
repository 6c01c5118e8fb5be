"""Exception types shared across the package."""


class DyadicParseError(ValueError):
    """Text does not denote a dyadic rational."""


class InvalidElementError(ValueError):
    """Breakpoint data does not define a valid dyadic PL circle map."""


class DomainError(ValueError):
    """Input is outside the mathematical domain of an operation."""


class InvariantViolation(RuntimeError):
    """An internally guaranteed identity failed; indicates a bug."""
