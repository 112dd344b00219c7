"""Exception hierarchy shared by every module.

Each class carries the process exit code the command-line front end uses
when the exception escapes a command.
"""


class RM3Error(Exception):
    exit_code = 1


class VerificationError(RM3Error):
    """A computed object disagrees with a claim or with a second route."""

    exit_code = 1


class InputError(RM3Error, ValueError):
    """Malformed or structurally incompatible input."""

    exit_code = 2


class StructureError(InputError):
    """Operands live in different polynomial rings."""


class DegenerateError(RM3Error):
    """A parameter value or reduction where the construction breaks down."""

    exit_code = 3


class PreconditionError(DegenerateError):
    """Operation called outside its domain, e.g. at a prime of bad reduction."""


class CountingError(VerificationError):
    """Point counts that cannot come from a genus-3 curve."""


class RMFailure(VerificationError):
    """No element of O_K reproduces the given zeta numerator."""


class AmbiguityError(VerificationError):
    def __init__(self, message, solutions=()):
        super().__init__(message)
        self.solutions = list(solutions)
