"""Exception types; each maps to a CLI exit code."""


class TopicalError(Exception):
    exit_code = 1


class ParseError(TopicalError, ValueError):
    exit_code = 2


class DimensionError(TopicalError, ValueError):
    exit_code = 3


class PreconditionError(TopicalError, ValueError):
    exit_code = 4


class InternalConsistencyError(TopicalError, AssertionError):
    """Two characterizations that must agree did not: a bug, never expected."""
    exit_code = 5
