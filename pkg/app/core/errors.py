# app/core/errors.py
"""
Error hierarchy shared by every service.

Each error carries a ``detail`` message and the process ``exit_code`` the CLI
reports for it, the same way an HTTP error carries its status code.
"""


class NicholsError(Exception):
    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class SpecError(NicholsError):
    """Malformed group, class or representation spec."""
    exit_code = 2


class PreconditionError(SpecError):
    """An operation was called outside its domain."""


class UnsupportedError(SpecError):
    """The input is well formed but outside what the library can compute."""


class BudgetExceededError(NicholsError):
    exit_code = 3


class AlgebraError(NicholsError):
    """An internal consistency check failed."""
    exit_code = 1
