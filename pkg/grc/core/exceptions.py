"""
Toolkit exception definitions.
Every error carries a stable code and the process exit code the CLI reports.
"""

from enum import Enum
from typing import Optional, Dict, Any


class ErrorCode(str, Enum):
    """Toolkit error codes"""
    INVALID_ARGUMENT = "INVALID_ARGUMENT"
    OUT_OF_RANGE = "OUT_OF_RANGE"
    NOT_FOUND = "NOT_FOUND"
    BAD_MAGIC = "BAD_MAGIC"
    TRUNCATED = "TRUNCATED"
    INVARIANT_VIOLATION = "INVARIANT_VIOLATION"
    VERIFICATION_MISMATCH = "VERIFICATION_MISMATCH"
    INTERNAL = "INTERNAL"
    UNKNOWN = "UNKNOWN"


class GrcError(Exception):
    """Base toolkit exception"""

    def __init__(
        self,
        error_code: str,
        message: str,
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.error_code = error_code
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to a structured error record"""
        return {
            "error": {
                "code": str(getattr(self.error_code, "value", self.error_code)),
                "message": self.message,
                "details": self.details,
            }
        }

    def one_line(self) -> str:
        """One-line diagnostic for the command line"""
        code = getattr(self.error_code, "value", self.error_code)
        return f"error: {code}: {self.message}"


class ValidationError(GrcError):
    """Raised when an argument or input value is invalid"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            error_code=ErrorCode.INVALID_ARGUMENT,
            message=message,
            exit_code=2,
            details=details,
        )


class OutOfRangeError(GrcError):
    """Raised when a numeric parameter is outside its documented range"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            error_code=ErrorCode.OUT_OF_RANGE,
            message=message,
            exit_code=2,
            details=details,
        )


class NotFoundError(GrcError):
    """Raised when an input file does not exist"""

    def __init__(self, message: str, resource: Optional[str] = None):
        details = {"resource": resource} if resource else {}
        super().__init__(
            error_code=ErrorCode.NOT_FOUND,
            message=message,
            exit_code=2,
            details=details,
        )


class FormatError(GrcError):
    """Raised when a serialized grammar cannot be decoded"""

    def __init__(
        self,
        message: str,
        error_code: ErrorCode = ErrorCode.INVARIANT_VIOLATION,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(
            error_code=error_code,
            message=message,
            exit_code=2,
            details=details,
        )


class BadMagicError(FormatError):
    """Raised when a payload does not start with the expected magic bytes"""

    def __init__(self, expected: str, found: bytes):
        super().__init__(
            f"bad magic: expected {expected!r}, found {found!r}",
            error_code=ErrorCode.BAD_MAGIC,
            details={"expected": expected, "found": found.hex()},
        )


class TruncatedPayloadError(FormatError):
    """Raised when a payload is shorter (or longer) than its header announces"""

    def __init__(self, message: str, expected: int, actual: int):
        super().__init__(
            message,
            error_code=ErrorCode.TRUNCATED,
            details={"expectedBytes": expected, "actualBytes": actual},
        )


class InvariantViolationError(FormatError):
    """Raised when a decoded grammar breaks a structural invariant"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message,
            error_code=ErrorCode.INVARIANT_VIOLATION,
            details=details,
        )


class VerificationError(GrcError):
    """Raised when two decoded texts or grammars differ"""

    def __init__(self, message: str, offset: Optional[int] = None):
        details = {"offset": offset} if offset is not None else {}
        super().__init__(
            error_code=ErrorCode.VERIFICATION_MISMATCH,
            message=message,
            exit_code=3,
            details=details,
        )
        self.offset = offset


class InternalAssertionError(GrcError):
    """Raised when an engine bookkeeping law fails"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            error_code=ErrorCode.INTERNAL,
            message=message,
            exit_code=4,
            details=details,
        )
