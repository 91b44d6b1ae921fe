"""Domain errors raised when an operation is called outside its mathematical domain."""

from __future__ import annotations


class DomainError(Exception):
    """Error with a stable machine-readable code, mapped to CLI exit status 2."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message
