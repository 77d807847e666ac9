"""
Custom exceptions and error reporting for the engine
"""
import logging
from typing import Any, Dict, List, Optional

# Configure logging
logger = logging.getLogger(__name__)


class PascalArrayError(Exception):
    """Base exception class for all engine exceptions"""

    def __init__(
        self,
        detail: str,
        error_code: Optional[str] = None,
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail)
        self.detail = detail
        self.error_code = error_code or "PASCAL_ERROR"
        self.errors = errors or []


class InvalidSpecError(PascalArrayError):
    """Malformed graph, family or algebra specification"""

    def __init__(
        self,
        detail: str = "Invalid specification",
        error_code: str = "INVALID_SPEC",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


class CorruptFamilyError(PascalArrayError):
    """An element has no unique edge-map preimage"""

    def __init__(
        self,
        detail: str = "Family violates the exact cover condition",
        error_code: str = "CORRUPT_FAMILY",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


class InconsistentCountError(PascalArrayError):
    """Two independent counts of the same quantity disagree"""

    def __init__(
        self,
        detail: str = "Independent counts disagree",
        error_code: str = "INCONSISTENT_COUNT",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


class IncompatibleFamiliesError(PascalArrayError):
    """Families live on different graphs"""

    def __init__(
        self,
        detail: str = "Families are indexed by different graphs",
        error_code: str = "INCOMPATIBLE_FAMILIES",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


class NoPropagatingLineError(PascalArrayError):
    """Bending requested on a diagram without propagating lines"""

    def __init__(
        self,
        detail: str = "No propagating line to bend",
        error_code: str = "NO_PROPAGATING_LINE",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


class UnderflowError(PascalArrayError):
    """Closing symbol with nothing left open"""

    def __init__(
        self,
        detail: str = "Nothing left to close",
        error_code: str = "UNDERFLOW",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


class IllegalEdgeError(PascalArrayError):
    """Edge does not start at the element's vertex"""

    def __init__(
        self,
        detail: str = "Illegal edge for this vertex",
        error_code: str = "ILLEGAL_EDGE",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


class DecorationError(PascalArrayError):
    """Decoration placed on a line that may not carry it"""

    def __init__(
        self,
        detail: str = "Illegal decoration",
        error_code: str = "DECORATION",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


class ColourError(PascalArrayError):
    """Colour index outside the allowed range"""

    def __init__(
        self,
        detail: str = "Colour out of range",
        error_code: str = "COLOUR",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


class SizeMismatchError(PascalArrayError):
    """Operands have incompatible sizes"""

    def __init__(
        self,
        detail: str = "Size mismatch",
        error_code: str = "SIZE_MISMATCH",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


class LabelCountError(PascalArrayError):
    """Halves carry different numbers of labelled points"""

    def __init__(
        self,
        detail: str = "Labelled point counts differ",
        error_code: str = "LABEL_COUNT",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


class ParityError(PascalArrayError):
    """Blob parity condition violated"""

    def __init__(
        self,
        detail: str = "Blob parity violated",
        error_code: str = "PARITY",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


class ClusterError(PascalArrayError):
    """Cluster operation outside its domain"""

    def __init__(
        self,
        detail: str = "Invalid cluster operation",
        error_code: str = "CLUSTER",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        super().__init__(detail=detail, error_code=error_code, errors=errors)


def report_error(exc: PascalArrayError, context: Optional[str] = None) -> Dict[str, Any]:
    """Log an engine error and return its serializable form"""
    logger.error(
        f"Engine Error: {exc.error_code} - {exc.detail}",
        extra={"context": context or ""},
    )

    content: Dict[str, Any] = {
        "error_code": exc.error_code,
        "detail": exc.detail,
    }
    if exc.errors:
        content["errors"] = exc.errors
    return content
