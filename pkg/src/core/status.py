"""
Check Status

Outcome labels shared by the golden-value, oracle and verification reports.
"""

from enum import Enum


class CheckStatus(Enum):
    """Outcome of a single comparison against reference data."""

    PASS = "PASS"
    FLAGGED = "FLAGGED"
    FAIL = "FAIL"
    DERIVED = "DERIVED"

    def __str__(self) -> str:
        return self.value
