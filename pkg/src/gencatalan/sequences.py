"""Generalized Catalan sequences g_n = p^(2n) * binom(n + q/p, n)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .params import GCParams
from .reports import Report


class NonIntegerTerm(ArithmeticError):
    """A generated term failed to be an integer, contradicting integrality of g."""


@dataclass(frozen=True)
class GCSequence:
    params: GCParams
    terms: tuple[int, ...]

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, n):
        return self.terms[n]


@lru_cache(maxsize=None)
def _terms(p: int, q: int, count: int) -> tuple[int, ...]:
    terms = [1]
    g = 1
    for n in range(count - 1):
        # g_{n+1} / g_n = p * (q + (n+1) p) / (n+1)
        num = g * p * (q + (n + 1) * p)
        g, rem = divmod(num, n + 1)
        if rem:
            raise NonIntegerTerm(f"g_{n + 1} for q/p = {q}/{p} is not an integer")
        terms.append(g)
    return tuple(terms)


def gen_catalan(params: GCParams, count: int) -> GCSequence:
    """First ``count`` terms of g^(q/p). The offset ``a`` plays no role here."""
    if count < 1:
        raise ValueError("count must be positive")
    return GCSequence(params, _terms(params.p, params.q, count))


def catalan_numbers(count: int) -> list[int]:
    """Cat_0 .. Cat_{count-1}, via Cat_n = -g^(-3/2)_{n+1} / 2."""
    if count < 1:
        raise ValueError("count must be positive")
    g = _terms(2, -3, count + 1)
    return [-g[n + 1] // 2 for n in range(count)]


def check_shift_recurrences(params: GCParams, count: int) -> Report:
    """Check both neighbour-shift identities linking g^(q/p) with g^((q -+ p)/p)."""
    p, q = params.p, params.q
    g = _terms(p, q, count)
    lower = _terms(p, q - p, count)
    upper = _terms(p, q + p, count)
    report = Report("shift-recurrences", params, count)
    for n in range(1, count):
        report.check((1, n), g[n], lower[n] + p * p * g[n - 1])
        report.check((2, n), g[n], upper[n] - p * p * upper[n - 1])
    return report
