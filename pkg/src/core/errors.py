"""
Exception hierarchy for the Coprime Toolkit.
Every error carries the process exit status the CLI reports for it.
"""


class ToolkitError(Exception):
    """Base class for all toolkit errors"""

    exit_code = 1

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class DomainError(ToolkitError, ValueError):
    """An argument lies outside the domain of the operation"""

    exit_code = 2


class CounterexampleError(ToolkitError):
    """A bounded check found a value that violates the statement under test"""

    exit_code = 3

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CheckpointError(ToolkitError):
    """The checkpoint file could not be read, parsed or written"""

    exit_code = 4


class OutputError(ToolkitError):
    """An output file could not be written"""

    exit_code = 4
