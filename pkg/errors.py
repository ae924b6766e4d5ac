"""
Exception hierarchy shared by every package.

main.py maps each class to a process exit code via exit_code_for().
"""

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_INTERNAL = 4


class QuantumEdgeError(Exception):
    """Root of all errors raised by this project."""


class DomainError(QuantumEdgeError, ValueError):
    """An argument falls outside the domain of the operation."""


class ParseError(DomainError):
    """An input file could not be parsed. `line` is 1-based when known."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        elif line is not None:
            where = f"line {line}: "
        super().__init__(f"{where}{message}")


class DegenerateInputError(DomainError):
    """Input whose normalization is undefined (all-zero data)."""

    def __init__(self, message, time_stamp=None):
        self.time_stamp = time_stamp
        if time_stamp is not None:
            message = f"frame s={time_stamp}: {message}"
        super().__init__(message)


class ResourceLimitError(QuantumEdgeError, RuntimeError):
    """Register too wide to simulate under the configured guard."""


class ConvergenceError(QuantumEdgeError, RuntimeError):
    """Gradient descent diverged."""


class InvariantViolation(QuantumEdgeError, RuntimeError):
    """A result failed an internal consistency check."""


def exit_code_for(exc):
    if isinstance(exc, (DegenerateInputError, ConvergenceError)):
        return EXIT_DEGENERATE
    if isinstance(exc, (DomainError, ResourceLimitError)):
        return EXIT_USAGE
    return EXIT_INTERNAL
