from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True, order=True)
class GCParams:
    """Parameters (p, q, a) of the family g^(q/p) and its Hankel offset a."""

    p: int
    q: int
    a: int = 0

    def __post_init__(self):
        for name in ("p", "q", "a"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise TypeError(f"{name} must be an integer")
        if self.p < 2:
            raise ValueError("p must be an integer >= 2")
        if self.q == 0 or gcd(self.p, self.q) != 1:
            raise ValueError("q must be nonzero and coprime to p")
        if self.a < 0:
            raise ValueError("a must be a non-negative integer")

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.q, self.p)

    def with_q(self, q: int) -> "GCParams":
        return GCParams(self.p, q, self.a)

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "a": self.a}

    def __str__(self):
        return f"(p={self.p}, q={self.q}, a={self.a})"


CATBERT = GCParams(2, -3, 1)

GRID_P = (2, 3, 5)
GRID_Q = (1, -1, 2, -2, 3, -3, 7, -7)
GRID_A = (0, 1, 2)


def param_grid(p_values=GRID_P, q_values=GRID_Q, a_values=GRID_A) -> list[GCParams]:
    """All valid (p, q, a) combinations; non-coprime pairs are skipped."""
    return [
        GCParams(p, q, a)
        for p in p_values
        for q in q_values
        if q != 0 and gcd(p, q) == 1
        for a in a_values
    ]
