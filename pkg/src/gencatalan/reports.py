"""Verification reports and their exact JSON encoding."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import format_rational


def encode(value):
    """Recursively turn rationals into exact strings; leave other JSON types alone."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, dict):
        return {k: encode(v) for k, v in value.items()}
    return value


@dataclass
class Violation:
    indices: tuple
    lhs: object
    rhs: object

    def to_dict(self) -> dict:
        return {"indices": list(self.indices), "lhs": encode(self.lhs), "rhs": encode(self.rhs)}


@dataclass
class Report:
    """Outcome of checking one identity at one parameter triple and size.

    ``checked`` counts the individual equalities or predicates evaluated, so an
    empty report can be told apart from one that never looked at anything.
    """

    identity: str
    params: object
    size: int
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0
    notes: list[str] = field(default_factory=list)

    def add(self, indices, lhs, rhs):
        self.violations.append(Violation(tuple(indices), lhs, rhs))

    def check(self, indices, lhs, rhs) -> bool:
        self.checked += 1
        if lhs != rhs:
            self.add(indices, lhs, rhs)
            return False
        return True

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        params = self.params.as_dict() if hasattr(self.params, "as_dict") else self.params
        out = {
            "identity": self.identity,
            "params": params,
            "size": self.size,
            "violations": [v.to_dict() for v in self.violations],
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return f"{self.identity} {self.params} size={self.size}: {status}"
