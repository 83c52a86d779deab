"""Orthogonal-polynomial factorization of the inverse Hankel matrix.

The rows of ``L`` are coefficient vectors of polynomials orthogonal for the
bilinear form given by ``G``, so ``L G L^T`` is the diagonal ``N^-1``. Using
``N L = M K`` the inverse becomes ``G^-1 = L^T M K`` with ``M`` diagonal and
``L``, ``K`` integer lower-triangular.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm

from .exact import binom_rational
from .matrices import ExactMatrix, diag_from, hankel_G, matmul, transpose
from .params import GCParams
from .reports import Report


class IdentityViolation(AssertionError):
    """An identity that should hold exactly did not."""


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _int_binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def L_entry(params: GCParams, n: int, k: int) -> Fraction:
    if k < 0 or k > n:
        return Fraction(0)
    p, a, r = params.p, params.a, params.ratio
    return (
        _sign(n + k)
        * p ** (2 * k)
        * binom_rational(n + k + a - 1 + r, k)
        * _int_binom(n + a, k + a)
    )


def K_entry(params: GCParams, n: int, k: int) -> Fraction:
    if k < 0 or k > n:
        return Fraction(0)
    p, a, r = params.p, params.a, params.ratio
    return (
        _sign(n + k)
        * p ** (2 * (k + a))
        * binom_rational(n + k + a - 1 + r, k + a)
        * _int_binom(n, k)
    )


def M_entry(params: GCParams, n: int) -> Fraction:
    p, q, a = params.p, params.q, params.a
    return Fraction(2 * n * p + a * p + q, q)


def M_numerator(params: GCParams, n: int) -> int:
    return 2 * n * params.p + params.a * params.p + params.q


def N_entry(params: GCParams, n: int) -> Fraction:
    p, q, a, r = params.p, params.q, params.a, params.ratio
    return (
        p ** (2 * a)
        * (2 * n * p + a * p + q)
        * binom_rational(n + a - 1 + r, a)
        / (q * comb(n + a, a))
    )


@lru_cache(maxsize=256)
def build_L(params: GCParams, n: int) -> ExactMatrix:
    return ExactMatrix([[L_entry(params, i, k) for k in range(n)] for i in range(n)])


@lru_cache(maxsize=256)
def build_K(params: GCParams, n: int) -> ExactMatrix:
    return ExactMatrix([[K_entry(params, i, k) for k in range(n)] for i in range(n)])


def build_M(params: GCParams, n: int) -> list[Fraction]:
    return [M_entry(params, i) for i in range(n)]


def build_N(params: GCParams, n: int) -> list[Fraction]:
    return [N_entry(params, i) for i in range(n)]


@dataclass(frozen=True)
class FactorizationBundle:
    params: GCParams
    n: int
    L: ExactMatrix
    K: ExactMatrix
    Mdiag: tuple[Fraction, ...]
    Ndiag: tuple[Fraction, ...]


def factorize(params: GCParams, n: int, check: bool = True) -> FactorizationBundle:
    """Build L, K, M, N of size n.

    With ``check`` the two transcriptions of the binomial indexing in L and K
    are cross-validated through ``N L == M K`` before the bundle is returned.
    """
    bundle = FactorizationBundle(
        params, n, build_L(params, n), build_K(params, n),
        tuple(build_M(params, n)), tuple(build_N(params, n)),
    )
    if any(x == 0 for x in bundle.Mdiag + bundle.Ndiag):
        raise IdentityViolation(f"zero diagonal entry in M or N for {params}")
    if check:
        report = verify_NL_eq_MK(params, n, bundle)
        if not report.ok:
            raise IdentityViolation(report.summary())
    return bundle


# three-term recurrence ----------------------------------------------------


@dataclass(frozen=True)
class ThreeTermCoeffs:
    n: int
    alpha: Fraction
    beta: Fraction
    gamma: Fraction


def three_term_coeffs(params: GCParams, n: int) -> ThreeTermCoeffs:
    p, q, a = params.p, params.q, params.a
    d1 = q + n * p + a * p + p
    d2 = q + 2 * n * p + a * p + p
    # both are congruent to q mod p and p does not divide q
    if d1 == 0 or d2 == 0:
        raise IdentityViolation(f"vanishing denominator at n={n} for {params}")
    e2 = q + 2 * n * p + a * p + 2 * p
    e3 = q + 2 * n * p + a * p + 3 * p
    alpha = -Fraction((n + a + 1) * (q + n * p) * e3, (n + 2) * d1 * d2)
    beta = -Fraction(
        e2 * (2 * n * q + a * q + 3 * q + 2 * n * n * p + 2 * a * n * p + 4 * n * p + (a + 1) ** 2 * p),
        (n + 2) * d1 * d2,
    )
    gamma = Fraction(p * e2 * e3, (n + 2) * d1)
    return ThreeTermCoeffs(n, alpha, beta, gamma)


def verify_three_term(params: GCParams, n_max: int) -> Report:
    """alpha_n L(n,k) + beta_n L(n+1,k) + gamma_n L(n+1,k-1) == L(n+2,k)
    for 0 <= n <= n_max - 2 and 0 <= k <= n + 2."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    report = Report("three-term", params, n_max)
    for n in range(n_max - 1):
        c = three_term_coeffs(params, n)
        for k in range(n + 3):
            lhs = (
                c.alpha * L_entry(params, n, k)
                + c.beta * L_entry(params, n + 1, k)
                + c.gamma * L_entry(params, n + 1, k - 1)
            )
            report.check((n, k), lhs, L_entry(params, n + 2, k))
    return report


# orthogonality and norms -------------------------------------------------


def lgl(params: GCParams, n: int) -> ExactMatrix:
    L = build_L(params, n)
    return matmul(matmul(L, hankel_G(params, n)), transpose(L))


def verify_orthogonality(params: GCParams, n: int) -> Report:
    """Off-diagonal entries of L G L^T vanish, plus the two row sums
    sum_k L[r,k] G[k,r-1] == 0 and sum_k L[r,k] G[k,r-2] == 0."""
    if n < 1:
        raise ValueError("n must be positive")
    report = Report("orthogonality", params, n)
    L = build_L(params, n)
    G = hankel_G(params, n)
    P = matmul(matmul(L, G), transpose(L))
    zero = Fraction(0)
    for i in range(n):
        for j in range(n):
            if i != j:
                report.check(("LGLt", i, j), P[i, j], zero)
    for r in range(1, n):
        for back in (1, 2):
            m = r - back
            if m < 0:
                continue
            s = sum((L[r, k] * G[k, m] for k in range(r + 1)), zero)
            report.check(("row-sum", r, m), s, zero)
    return report


def verify_lg_upper(params: GCParams, n: int) -> Report:
    """L G is upper triangular: sum_k L[r,k] G[k,m] == 0 for all m < r."""
    report = Report("lg-upper-triangular", params, n)
    LG = matmul(build_L(params, n), hankel_G(params, n))
    for r in range(n):
        for m in range(r):
            report.check((r, m), LG[r, m], Fraction(0))
    return report


def verify_norm(params: GCParams, n: int) -> Report:
    """Diagonal of L G L^T equals 1 / N."""
    report = Report("norm", params, n)
    P = lgl(params, n)
    for i, Nii in enumerate(build_N(params, n)):
        report.check((i,), P[i, i], 1 / Nii)
    return report


def verify_NL_eq_MK(params: GCParams, n: int, bundle: FactorizationBundle | None = None) -> Report:
    report = Report("nl-eq-mk", params, n)
    if bundle is None:
        L, K = build_L(params, n), build_K(params, n)
        Md, Nd = build_M(params, n), build_N(params, n)
    else:
        L, K, Md, Nd = bundle.L, bundle.K, bundle.Mdiag, bundle.Ndiag
    for i in range(n):
        for k in range(n):
            report.check((i, k), Nd[i] * L[i, k], Md[i] * K[i, k])
    return report


# inverse and determinants ------------------------------------------------


def lmk_product(L: ExactMatrix, Mdiag, K: ExactMatrix) -> ExactMatrix:
    """L^T diag(M) K using the triangular structure of L and K.

    Entry (r, c) is sum_{i >= max(r, c)} L[i, r] M[i] K[i, c]. When L and K
    are integral (always, for valid parameters) the sums run over integers
    with M put on a common denominator.
    """
    n = L.rows
    Mdiag = [Fraction(m) for m in Mdiag]
    integral = all(x.denominator == 1 for M_ in (L, K) for row in M_ for x in row)
    if not integral:
        zero = Fraction(0)
        return ExactMatrix([
            [sum((L[i, r] * Mdiag[i] * K[i, c] for i in range(max(r, c), n)), zero) for c in range(n)]
            for r in range(n)
        ])
    den = lcm(*(m.denominator for m in Mdiag))
    Lint = [[x.numerator for x in row] for row in L]
    Kint = [[x.numerator for x in row] for row in K]
    Mint = [(m * den).numerator for m in Mdiag]
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            s = 0
            for i in range(max(r, c), n):
                s += Lint[i][r] * Mint[i] * Kint[i][c]
            row.append(Fraction(s, den))
        rows.append(row)
    return ExactMatrix(rows)


def inverse_via_LMK(params: GCParams, n: int) -> ExactMatrix:
    """G(n)^-1 as L^T M K."""
    if n < 1:
        raise ValueError("n must be positive")
    return lmk_product(build_L(params, n), build_M(params, n), build_K(params, n))


def scaled_inverse(params: GCParams, n: int) -> ExactMatrix:
    """(G(n) / q)^-1 = L^T (q M) K."""
    qM = [params.q * m for m in build_M(params, n)]
    return lmk_product(build_L(params, n), qM, build_K(params, n))


def verify_summand_symmetry(params: GCParams, n: int) -> Report:
    """L[i,r] M[i] K[i,c] == K[i,r] M[i] L[i,c] for every summand, and G^-1 symmetric."""
    report = Report("summand-symmetry", params, n)
    L, K, Md = build_L(params, n), build_K(params, n), build_M(params, n)
    for r in range(n):
        for c in range(n):
            for i in range(max(r, c), n):
                report.check((r, c, i), L[i, r] * Md[i] * K[i, c], K[i, r] * Md[i] * L[i, c])
    inv = lmk_product(L, Md, K)
    for r in range(n):
        for c in range(r + 1, n):
            report.check(("sym", r, c), inv[r, c], inv[c, r])
    return report


def det_inverse_formula(params: GCParams, n: int) -> Fraction:
    p, q, a, r = params.p, params.q, params.a, params.ratio
    out = Fraction(1)
    for k in range(n):
        top = 2 * k + a - 1 + r
        out *= (
            p ** (2 * (2 * k + a))
            * Fraction(2 * k * p + a * p + q, q)
            * binom_rational(top, k)
            * binom_rational(top, k + a)
        )
    return out


def det_scaled_inverse_formula(params: GCParams, n: int) -> Fraction:
    p, q, a, r = params.p, params.q, params.a, params.ratio
    out = Fraction(1)
    for k in range(n):
        top = 2 * k + a - 1 + r
        out *= (
            p ** (2 * (2 * k + a))
            * (2 * k * p + a * p + q)
            * binom_rational(top, k)
            * binom_rational(top, k + a)
        )
    return out


def _integrality_report(identity: str, params: GCParams, n: int, A: ExactMatrix) -> Report:
    from .matrices import is_integer_matrix

    report = Report(identity, params, n)
    report.checked = A.rows * A.cols
    _, offenders = is_integer_matrix(A)
    for i, j, x in offenders:
        report.add((i, j), x, "integer")
    return report


def scaled_inverse_integrality(params: GCParams, n: int) -> Report:
    """q G(n)^-1 has integer entries, for every valid (p, q, a)."""
    return _integrality_report("scaled-integrality", params, n, scaled_inverse(params, n))


def main_integrality(params: GCParams, n: int) -> Report:
    """G(n)^-1 itself is an integer matrix when |q| is 1 or 2."""
    if abs(params.q) not in (1, 2):
        raise ValueError("plain-inverse integrality is only claimed for q in {+-1, +-2}")
    return _integrality_report("integrality", params, n, inverse_via_LMK(params, n))


def verify_inverse(params: GCParams, n: int) -> Report:
    """Factorized inverse against the elimination oracle, and G @ G^-1 == I."""
    from .matrices import invert_oracle

    report = Report("inverse", params, n)
    G = hankel_G(params, n)
    fast = inverse_via_LMK(params, n)
    oracle = invert_oracle(G)
    ident = ExactMatrix.identity(n)
    prod = matmul(G, fast)
    for i in range(n):
        for j in range(n):
            report.check(("oracle", i, j), fast[i, j], oracle[i, j])
            report.check(("G@Ginv", i, j), prod[i, j], ident[i, j])
    return report


def verify_determinants(params: GCParams, n: int) -> Report:
    """Both closed-form determinants against Bareiss determinants."""
    from .matrices import det_oracle

    report = Report("determinants", params, n)
    for m in range(1, n + 1):
        G = hankel_G(params, m)
        report.check(("inverse", m), det_inverse_formula(params, m), det_oracle(inverse_via_LMK(params, m)))
        report.check(("scaled", m), det_scaled_inverse_formula(params, m), det_oracle(scaled_inverse(params, m)))
        report.check(("formula*detG", m), det_inverse_formula(params, m) * det_oracle(G), Fraction(1))
    return report
