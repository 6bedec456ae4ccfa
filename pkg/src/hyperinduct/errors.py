"""Exception hierarchy.

``InternalFailure`` and its subclasses signal that a guarantee of the theory
was not met by a computation; they always indicate a bug or an out-of-scope
input, never a user error.
"""


class HyperinductError(Exception):
    pass


class SpecError(HyperinductError, ValueError):
    """Malformed group construction expression."""


class CapExceeded(HyperinductError):
    """A group or product subgroup is larger than the configured order cap."""


class NotNormal(HyperinductError, ValueError):
    pass


class InternalFailure(HyperinductError):
    pass


class DichotomyFailure(InternalFailure):
    """Neither branch of the deep/elementary split could be certified."""


class NoSolution(InternalFailure):
    """The p-local induction system had no solution."""


class LemmaViolation(InternalFailure):
    """A machine-checked implication between group properties failed."""
