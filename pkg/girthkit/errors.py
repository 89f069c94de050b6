"""Exception hierarchy shared by the library and the CLI.

Every error carries the process exit code the CLI reports for it.
"""

from typing import Any, Dict, List, Optional

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_BAD_INPUT = 2
EXIT_VERIFICATION_FAILED = 3
EXIT_RETRY_EXHAUSTED = 4


class GirthKitError(Exception):
    """Base class for all girth-kit errors."""

    exit_code = EXIT_INTERNAL

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.context = context or {}


class ArgumentError(GirthKitError, ValueError):
    """Invalid vertex id, parameter or predicate."""

    exit_code = EXIT_BAD_INPUT


class GraphFormatError(GirthKitError):
    """Graph text file could not be parsed.

    Attributes:
        errors: ValidationError records for every offending line
    """

    exit_code = EXIT_BAD_INPUT

    def __init__(self, message: str, errors: Optional[List[Any]] = None):
        super().__init__(message)
        self.errors = list(errors or [])


class GenerationError(GirthKitError):
    """A generator was asked for an instance it cannot build."""

    exit_code = EXIT_BAD_INPUT


class CapacityError(GirthKitError):
    """Instance too large for all-pairs verification."""

    exit_code = EXIT_BAD_INPUT


class ContractError(GirthKitError):
    """A precondition of a library call was violated by the caller."""

    exit_code = EXIT_BAD_INPUT


class InvariantViolation(GirthKitError):
    """An internal runtime check failed."""

    exit_code = EXIT_INTERNAL


class VerificationFailed(GirthKitError):
    """A verifier returned ok = false."""

    exit_code = EXIT_VERIFICATION_FAILED


class BallGrowStalled(GirthKitError):
    """No ring index passed the growth test for some center.

    This is the event the size analysis rules out with high probability; the
    caller reseeds and retries.
    """

    exit_code = EXIT_RETRY_EXHAUSTED

    def __init__(self, vertex: int, radius: int, outer_size: int):
        super().__init__(
            f"ball growth stalled at vertex {vertex} (R={radius}, |E_K|={outer_size})",
            {'vertex': vertex, 'radius': radius, 'outer_size': outer_size},
        )
        self.vertex = vertex
        self.radius = radius
        self.outer_size = outer_size


class RetryBudgetExhausted(GirthKitError):
    """All reseeds failed; wraps the last failure."""

    exit_code = EXIT_RETRY_EXHAUSTED

    def __init__(self, message: str, attempts: int, last_error: Optional[Exception] = None):
        super().__init__(message, {'attempts': attempts})
        self.attempts = attempts
        self.last_error = last_error
