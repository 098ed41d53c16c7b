"""Exception types and the shared search budget."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class BoxcolError(Exception):
    """Base class for all package errors."""


class FormatError(BoxcolError, ValueError):
    """Malformed serialized input (graph6, edge list, poset text)."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedSizeError(BoxcolError, ValueError):
    pass


class CertificateError(BoxcolError, ValueError):
    """A coloring certificate failed validation.

    ``violation`` is the offending ``(u, v)`` pair: ``u`` is 2-reachable
    from ``v`` and both carry the same color.
    """

    def __init__(self, message: str, violation: tuple[int, int] | None = None):
        super().__init__(message)
        self.violation = violation


class BudgetExceeded(BoxcolError):
    """An exact search would exceed its budget.

    ``bounds`` carries whatever was known when the search stopped, e.g.
    ``{"upper": 4}`` or ``{"lower": 2, "upper": 3}``.
    """

    def __init__(self, message: str, bounds: dict[str, Any] | None = None):
        super().__init__(message)
        self.bounds = dict(bounds or {})


@dataclass(frozen=True)
class OracleBudget:
    """Size and work limits for the exhaustive searches.

    ``max_n`` caps the instance size, ``max_candidates`` caps the number of
    enumerated objects (orders, extensions, candidate factors).
    ``time_hint`` is informational only.
    """

    max_n: int
    max_candidates: int = 10**7
    time_hint: float = field(default=60.0, compare=False)

    def __post_init__(self):
        if self.max_n <= 0 or self.max_candidates <= 0 or self.time_hint <= 0:
            raise ValueError("budget values must be positive")
