"""
Exception hierarchy for the propus toolkit.

Every construction route raises a subclass of PropusError; the CLI maps them
to exit codes and the HTTP routers to HTTPException.
"""
from typing import Optional, Tuple


class PropusError(Exception):
    """Base class for all toolkit errors."""


class FieldError(PropusError, ValueError):
    pass


class OrderMismatch(PropusError, ValueError):
    pass


class NotHadamard(PropusError):
    def __init__(self, message: str, block_pair: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.block_pair = block_pair


class NotCirculantInput(PropusError):
    pass


class NotFound(PropusError):
    pass


class NotInCatalog(NotFound):
    pass


class BadResidue(PropusError):
    pass


class WrongResidue(PropusError):
    pass


class AsymmetricX(PropusError):
    pass


class InvalidConferencePair(PropusError):
    pass


class UnsupportedOrder(PropusError):
    pass


class ConditionsFailed(PropusError):
    def __init__(self, report):
        failed = ", ".join(report.failed()) or "none"
        super().__init__(f"Miyamoto conditions failed: {failed}")
        self.report = report


class SearchBudgetExceeded(PropusError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"search needs {required} nodes, budget is {budget}")
        self.required = required
        self.budget = budget


class CatalogFormatError(PropusError):
    def __init__(self, message: str, lineno: Optional[int] = None):
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)
        self.lineno = lineno


class CatalogVerificationError(PropusError):
    pass


def http_status_for(exc: Exception) -> int:
    """HTTP status used by the routers for a toolkit error."""
    if isinstance(exc, (NotHadamard, ConditionsFailed, CatalogVerificationError, CatalogFormatError)):
        return 422
    if isinstance(exc, SearchBudgetExceeded):
        return 413
    if isinstance(exc, PropusError):
        return 404
    return 400
