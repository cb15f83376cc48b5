from typing import Any, Optional

from pydantic import BaseModel


class HyperfanError(Exception):
    """Represents a failure raised by any hyperfan operation.

    Args:
        code (int): The error code.
        message (str): The error message.
        details (Optional[dict[str, Any]]): Machine-readable context. Defaults to None.

    Returns:
        None

    """

    def __init__(
        self,
        code: int,
        message: str,
        details: Optional[dict[str, Any]] = None,
    ) -> None:
        self.code = code
        self.message = message
        self.details: dict[str, Any] = dict(details or {})
        super().__init__(
            f"Error {code}: {message}"
            + (f" ({self.details})" if self.details else ""),
        )

    def __repr__(self) -> str:
        """Representation of the exception.

        Returns
        -------
            str: The string representation of the exception.

        """
        return (
            f"{self.__class__.__name__}(code={self.code}, message={self.message!r}, "
            f"details={self.details!r})"
        )

    def to_record(self) -> dict[str, Any]:
        """Build the machine-readable error record.

        Returns
        -------
            dict[str, Any]: The error record with class name, code, message and details.

        """
        return {
            "error": self.__class__.__name__,
            "code": self.code,
            "message": self.message,
            "details": self.details,
        }


class _CodedError(HyperfanError):
    """Base for errors with a fixed code."""

    CODE: int = 0

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None) -> None:
        super().__init__(self.CODE, message, details)


# 1XXX structural errors
class InvalidHypergraphError(_CodedError):
    """Raised when a hypergraph or triangulation violates a structural invariant.

    Args:
        message (str): The error message.
        details (Optional[dict[str, Any]]): Machine-readable context. Defaults to None.

    Returns:
        None

    """

    CODE = 1001


class InvalidParameterError(_CodedError):
    """Raised when a numeric argument is out of its documented range.

    Args:
        message (str): The error message.
        details (Optional[dict[str, Any]]): Machine-readable context. Defaults to None.

    Returns:
        None

    """

    CODE = 1002


class InvalidQueryError(_CodedError):
    """Raised when a structural query names a missing edge or an incident vertex.

    Args:
        message (str): The error message.
        details (Optional[dict[str, Any]]): Machine-readable context. Defaults to None.

    Returns:
        None

    """

    CODE = 1003


class UnreachableVertexError(_CodedError):
    """Raised when a level is requested for an endpoint in another component.

    Args:
        message (str): The error message.
        details (Optional[dict[str, Any]]): Machine-readable context. Defaults to None.

    Returns:
        None

    """

    CODE = 1004


class NotTwoConnectedError(_CodedError):
    """Raised when the far-side subgraph is requested on a graph that is not 2-connected."""

    CODE = 1005


class UniformityError(_CodedError):
    """Raised when an outerplanar feature is used with a uniformity other than 3."""

    CODE = 1006


# 2XXX numerical errors
class DimensionMismatchError(_CodedError):
    """Raised when a vector length differs from the vertex count."""

    CODE = 2001


class InvalidVectorError(_CodedError):
    """Raised when a vector is zero or has negative entries where x >= 0, x != 0 is required."""

    CODE = 2002


class ConvergenceError(_CodedError):
    """Raised when the power iteration exhausts its iteration budget.

    The current Collatz-Wielandt bracket is kept in ``details`` so the caller
    can decide whether to retry with a larger budget.

    Args:
        message (str): The error message.
        details (Optional[dict[str, Any]]): Must carry ``bracket_low``, ``bracket_high`` and ``iterations``.

    Returns:
        None

    """

    CODE = 2003

    @property
    def bracket(self) -> tuple[float, float]:
        """The bracket reached before giving up."""
        return (
            float(self.details.get("bracket_low", float("nan"))),
            float(self.details.get("bracket_high", float("nan"))),
        )

    @property
    def iterations(self) -> int:
        """Iterations spent."""
        return int(self.details.get("iterations", 0))


# 3XXX transformation errors
class PreconditionError(_CodedError):
    """Raised when a transformation precondition fails.

    ``details["precondition"]`` names the failing precondition.
    """

    CODE = 3001

    @property
    def precondition(self) -> str:
        """Name of the failing precondition."""
        return str(self.details.get("precondition", ""))


# 4XXX input/usage errors
class ParseError(_CodedError):
    """Raised when an input document is malformed.

    ``details`` names the offending ``line`` and/or ``field``.
    """

    CODE = 4001

    @property
    def line(self) -> Optional[int]:
        """1-based line of the failure, when known."""
        line = self.details.get("line")
        return int(line) if line is not None else None

    @property
    def field(self) -> Optional[str]:
        """Dotted field path of the failure, when known."""
        field = self.details.get("field")
        return str(field) if field is not None else None


class UsageError(_CodedError):
    """Raised when command-line arguments fail validation."""

    CODE = 4002


class InputFileError(_CodedError):
    """Raised when an input path cannot be read."""

    CODE = 4003


ERROR_CODES: dict[int, type[HyperfanError]] = {
    1001: InvalidHypergraphError,
    1002: InvalidParameterError,
    1003: InvalidQueryError,
    1004: UnreachableVertexError,
    1005: NotTwoConnectedError,
    1006: UniformityError,
    2001: DimensionMismatchError,
    2002: InvalidVectorError,
    2003: ConvergenceError,
    3001: PreconditionError,
    4001: ParseError,
    4002: UsageError,
    4003: InputFileError,
}


def error_from_record(record: dict[str, Any]) -> HyperfanError:
    """Rebuild an exception from an error record.

    Args:
        record (dict[str, Any]): A record produced by :meth:`HyperfanError.to_record`
            or a worker error payload (``code``/``msg``/``details``).

    Returns:
        HyperfanError: The matching exception instance (not raised).

    """
    code = int(record.get("code", 0))
    message = str(record.get("message", record.get("msg", "No error message provided")))
    details = record.get("details") or {}
    exception_class = ERROR_CODES.get(code)
    if exception_class is None:
        return HyperfanError(code, message, details)
    return exception_class(message, details)  # type: ignore[call-arg]


class ConversionError(Exception):
    """Raised when the conversion to the model type fails.

    Args:
        initial_data (dict[str, Any]): The initial data that failed to convert.
        model_type (type[BaseModel]): The model type that was attempted to convert to.

    Returns:
        None

    """

    def __init__(
        self,
        initial_data: dict[str, Any],
        model_type: type[BaseModel],
    ) -> None:
        self.initial_data = initial_data
        self.model_type = model_type
        super().__init__(f"Failed to convert payload into {model_type.__name__}")

    def __repr__(self) -> str:
        """Representation of the exception.

        Returns
        -------
            str: The string representation of the exception.

        """
        return (
            f"{self.__class__.__name__}(initial_data={str(self.initial_data)[:300]}, "
            f"model_type={self.model_type!r})"
        )
