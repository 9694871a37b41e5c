"""Checker reports and their JSON encoding."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional


class Status(str, enum.Enum):
    VERIFIED = "verified"
    HYPOTHESIS_FAILS = "hypothesis_fails"
    FAILED = "failed"
    ERROR = "error"


EXIT_CODES = {
    Status.VERIFIED: 0,
    Status.FAILED: 1,
    Status.HYPOTHESIS_FAILS: 2,
    Status.ERROR: 3,
}


@dataclass(frozen=True)
class Report:
    """Outcome of one instance check.

    ``reason`` names the failing clause (e.g. ``"not_invariant"``,
    ``"theorem_violated"``) and is None on success.
    """

    status: Status
    witness: Any = None
    reason: Optional[str] = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.status is Status.VERIFIED

    def to_json(self):
        out = {"status": self.status.value, "witness": jsonify(self.witness)}
        if self.reason is not None:
            out["reason"] = self.reason
        out["details"] = jsonify(self.details)
        return out


def jsonify(obj):
    """Encode library values with exact rationals as "p/q" strings."""
    from .poly import Poly, ZPoly
    from .weights import GroupElem, Weight, MinusInfinity

    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (Poly, ZPoly)):
        return str(obj)
    if isinstance(obj, GroupElem):
        return [str(c) for c in obj.coords]
    if isinstance(obj, MinusInfinity):
        return None
    if isinstance(obj, Weight):
        return [jsonify(g) for g in obj.per_var]
    if isinstance(obj, Report):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonify(v) for v in items]
    raise TypeError(f"cannot encode {type(obj).__name__}")
