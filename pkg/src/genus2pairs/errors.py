"""Exception hierarchy shared across the package.

Every domain failure derives from DomainError so the command line layer
can map it to a single exit code.  Class names double as the violation
names printed on stderr (minus the ``Error`` suffix).
"""


class DomainError(Exception):
    """Base class for all domain-level failures."""

    @property
    def violation_name(self) -> str:
        return type(self).__name__.removesuffix("Error")


class InvalidWordError(DomainError):
    """A word string that does not parse."""


class EmptyWordError(DomainError):
    """An operation that needs a nonempty word received the identity."""


class SingleGeneratorError(DomainError):
    """An operation that needs both generators saw only one."""


class NotInvertibleError(DomainError):
    """An endomorphism given by a non-basis image pair."""


class InvalidParamsError(DomainError):
    """Parameters outside the domain of a constructor or classifier."""


class UnknownCurveError(DomainError):
    """A curve name missing from a diagram."""


class UnlabeledBandError(DomainError):
    """A band without a disk-crossing label cannot be traced."""


class ParityViolationError(DomainError):
    """Endpoint counts on paired disk copies disagree."""


class BetaNotProperPowerError(DomainError):
    """The second curve of a power pair must be a proper power."""


class BudgetExceededError(DomainError):
    """A brute-force computation was asked to exceed its budget."""
