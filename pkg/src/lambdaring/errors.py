"""Exception hierarchy shared by every module."""


class LambdaRingError(Exception):
    pass


class DomainError(LambdaRingError, ValueError):
    """An argument lies outside the domain of the operation."""


class CapExceededError(DomainError):
    """A degree or size limit would be exceeded."""


class OracleInapplicableError(DomainError):
    """The brute-force oracle cannot be used on this input."""


class ParseError(DomainError):
    """Malformed expression text.

    ``position`` is the byte offset into the source where parsing failed.
    """

    def __init__(self, message, position, expected=None):
        self.position = position
        self.expected = expected
        detail = f"{message} at offset {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)
