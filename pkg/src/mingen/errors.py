"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class MingenError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class UsageError(MingenError):
    """Bad argument: out-of-range index, unknown name, invalid parameter."""

    exit_code = 2


class ParseError(MingenError):
    exit_code = 2

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(MingenError):
    """A candidate table failed the group axioms; carries the full report."""

    exit_code = 1

    def __init__(self, report):
        self.report = report
        super().__init__(report.summary())


class ContractError(MingenError):
    """An input violated an operation's precondition (e.g. a non-closed subgroup)."""

    exit_code = 1


class DomainError(MingenError):
    """The inputs are well formed but the request makes no sense for them."""

    exit_code = 1


class ResourceError(MingenError):
    exit_code = 3


class DefectError(MingenError):
    """A theorem-guaranteed check failed. Reaching this means a bug."""

    exit_code = 1
