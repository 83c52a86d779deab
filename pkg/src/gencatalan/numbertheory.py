"""Lucas-type divisibility scans and constructive integrality certificates.

The certificates walk every summand L[i,r] M[i] K[i,c] of an inverse entry and
name the factor that carries the required prime, following the case split by
residues of i, k and a that proves integrality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .exact import binom_rational, divides, is_prime, legendre_valuation, valuation
from .factorization import K_entry, L_entry, M_entry, M_numerator
from .params import CATBERT, GCParams
from .reports import Report


class UnsupportedCase(ValueError):
    """Parameters or prime not covered by a proven divisibility argument."""


def _require_prime(p):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def lucas_scan(p: int, n_max: int) -> Report:
    """p | C(n, k) whenever p | n and p does not divide k."""
    _require_prime(p)
    report = Report("lucas", {"p": p}, n_max)
    for n in range(0, n_max + 1, p):
        for k in range(n + 1):
            if k % p:
                report.check((n, k), comb(n, k) % p, 0)
    return report


def lucas_var1_scan(q: int, p: int, n_max: int, k_max: int, n_min: int = 0) -> Report:
    """q | p^(2k) binom(n + q/p, k) when q | n and k is not a multiple of q.

    The hypothesis p^2 n + p q == 0 (mod q) is equivalent to q | n because
    gcd(p, q) = 1.
    """
    _require_prime(q)
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    report = Report("lucas-var1", {"p": p, "q": q}, n_max)
    r = Fraction(q, p)
    start = n_min + (-n_min) % q
    for n in range(start, n_max + 1, q):
        for k in range(1, k_max + 1):
            if k % q == 0:
                continue
            value = p ** (2 * k) * binom_rational(n + r, k)
            report.checked += 1
            if not divides(q, value):
                report.add((n, k), value, f"divisible by {q}")
    return report


def lucas_var2_scan(n_max: int, k_max: int | None = None) -> Report:
    """3 | 4^k binom(n + k - 3/2, k) for n == k == 2 (mod 3)."""
    if k_max is None:
        k_max = n_max
    report = Report("lucas-var2", {"p": 2, "q": -3}, n_max)
    for n in range(2, n_max + 1, 3):
        for k in range(2, k_max + 1, 3):
            value = 4 ** k * binom_rational(n + k - Fraction(3, 2), k)
            report.checked += 1
            if not divides(3, value):
                report.add((n, k), value, "divisible by 3")
    return report


def lucas_var3_scan(p: int, q: int, n_min: int, n_max: int, k_max: int) -> Report:
    """p | p^(2k) binom(n + q/p, k) for every integer n and k >= 1.

    Each numerator factor p (p (n - i) + q) carries exactly one power of p, so
    the valuation is exactly k - v_p(k!), which is at least 1.
    """
    _require_prime(p)
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    report = Report("lucas-var3", {"p": p, "q": q}, n_max)
    r = Fraction(q, p)
    for n in range(n_min, n_max + 1):
        for k in range(1, k_max + 1):
            value = p ** (2 * k) * binom_rational(n + r, k)
            v = valuation(p, value)
            report.checked += 1
            if v < 1:
                report.add((n, k), value, f"divisible by {p}")
            elif v != k - legendre_valuation(p, k):
                report.add(("valuation", n, k), v, k - legendre_valuation(p, k))
    return report


# certificates ------------------------------------------------------------


class Witness(enum.Enum):
    M_NUMERATOR = "M-numerator"
    K_FACTOR = "K-factor"
    L_FACTOR = "L-factor"


@dataclass(frozen=True)
class DivisibilityCertificate:
    prime: int
    entry: tuple[int, int]
    summand: int
    witness: Witness
    form: str  # "LMK" for L[i,r] M K[i,c], "KML" for K[i,r] M L[i,c]
    witnessed_value: Fraction
    summand_value: Fraction
    verified: bool

    def to_dict(self) -> dict:
        from .reports import encode

        return {
            "prime": self.prime,
            "entry": list(self.entry),
            "summand": self.summand,
            "witness": self.witness.value,
            "form": self.form,
            "witnessed_value": encode(self.witnessed_value),
            "summand_value": encode(self.summand_value),
            "verified": self.verified,
        }


def _q2_witness(params: GCParams, i: int, k: int) -> Witness:
    a = params.a
    if a % 2 == 0:
        return Witness.M_NUMERATOR
    if (i - k) % 2:
        # one of C(i, k), C(i+a, k+a) has an even top and an odd bottom
        return Witness.K_FACTOR if i % 2 == 0 else Witness.L_FACTOR
    return Witness.L_FACTOR if k % 2 else Witness.K_FACTOR


def _catbert3_witness(i: int, k: int) -> Witness:
    ri, rk = i % 3, k % 3
    if ri == 1:
        return Witness.M_NUMERATOR
    if ri == 0:
        return Witness.K_FACTOR
    return Witness.L_FACTOR


def _witness_rule(params: GCParams, target: int):
    if target == 2 and abs(params.q) == 2:
        return lambda i, k: _q2_witness(params, i, k)
    if params == CATBERT and target == 2:
        return lambda i, k: Witness.K_FACTOR
    if params == CATBERT and target == 3:
        return _catbert3_witness
    raise UnsupportedCase(f"no divisibility argument for prime {target} at {params}")


def _required_valuation(params: GCParams, target: int) -> int:
    # Catbert's inverse is -1/2 G^-1, so each summand must be even; otherwise
    # the summand only has to be integral at the target prime.
    if params == CATBERT and target == 2:
        return 1
    return 0


def build_divisibility_certificate(params: GCParams, n: int, target: int) -> list[DivisibilityCertificate]:
    """One certificate per (entry, summand) of G(n)^-1 = L^T M K at prime ``target``."""
    rule = _witness_rule(params, target)
    need = _required_valuation(params, target)
    certs = []
    for r in range(n):
        for c in range(n):
            for i in range(r, n):
                w = rule(i, c)
                Mi = M_entry(params, i)
                if w is Witness.M_NUMERATOR:
                    value, form = Fraction(M_numerator(params, i)), "LMK"
                elif w is Witness.K_FACTOR:
                    value, form = K_entry(params, i, c), "LMK"
                else:
                    value, form = L_entry(params, i, c), "KML"
                if form == "LMK":
                    summand = L_entry(params, i, r) * Mi * K_entry(params, i, c)
                else:
                    summand = K_entry(params, i, r) * Mi * L_entry(params, i, c)
                ok = divides(target, value) and (summand == 0 or valuation(target, summand) >= need)
                certs.append(DivisibilityCertificate(target, (r, c), i, w, form, value, summand, ok))
    return certs


def certificate_report(params: GCParams, n: int, target: int) -> Report:
    report = Report(f"certificate-{target}", params, n)
    for cert in build_divisibility_certificate(params, n, target):
        report.checked += 1
        if not cert.verified:
            report.add((*cert.entry, cert.summand), cert.witnessed_value, f"{cert.witness.value} divisible by {target}")
    return report


def certified_primes(params: GCParams) -> tuple[int, ...]:
    if params == CATBERT:
        return (2, 3)
    if abs(params.q) == 2:
        return (2,)
    raise UnsupportedCase(f"no certificate available for {params}")


def certificates_imply_integrality(params: GCParams, n: int) -> bool:
    """True if every summand certificate verifies at every prime that can
    appear in a denominator of the summands.

    The only denominators in L^T M K come from q in M, so certifying each
    prime factor of q suffices. For Catbert the prime 2 certifies the extra
    factor 1/2 in C^-1 = -1/2 G^-1.
    """
    primes = certified_primes(params)
    return all(c.verified for t in primes for c in build_divisibility_certificate(params, n, t))
