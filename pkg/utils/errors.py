"""
Error hierarchy shared by every covspec package.

The CLI maps these to exit codes: validation and domain errors exit 2,
capacity errors exit 3.
"""

from typing import Optional


class CovspecError(Exception):
    """Base class for all covspec errors."""


class DomainError(CovspecError):
    """A well-formed request violates an operation precondition."""


class InputValidationError(CovspecError):
    """
    An object or input file is structurally invalid.

    Args:
        message: Human readable description
        path: Offending file path, when the error came from a file
        key: Offending key inside the file (dotted path)
    """

    def __init__(self, message: str, path: Optional[str] = None, key: Optional[str] = None):
        super().__init__(message)
        self.path = path
        self.key = key

    def __str__(self) -> str:
        text = super().__str__()
        if self.path and self.key:
            return f"{self.path}: {self.key}: {text}"
        if self.path:
            return f"{self.path}: {text}"
        return text


class CapacityError(CovspecError):
    """
    A configured enumeration cap was exceeded.

    Args:
        cap_name: Name of the setting that was exceeded
        limit: Configured limit
        observed: Size that was reached (or requested)
    """

    def __init__(self, cap_name: str, limit: int, observed: int, detail: str = ""):
        message = f"{cap_name} exceeded: {observed} > {limit}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
        self.cap_name = cap_name
        self.limit = limit
        self.observed = observed
