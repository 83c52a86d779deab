"""The Hankel matrix of reciprocal Catalan numbers and its integer inverse."""

from __future__ import annotations

import os
import urllib.request
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .factorization import det_inverse_formula, inverse_via_LMK
from .matrices import ExactMatrix, hankel_G, matmul
from .params import CATBERT
from .reports import Report
from .sequences import catalan_numbers

SEQUENCE_ID = "A296056"
DEFAULT_URL_TEMPLATE = "https://oeis.org/{id}/b{digits}.txt"
URL_ENV_VAR = "GENCATALAN_OEIS_URL"

ERRATA = (
    "M[i,i] for (p,q,a)=(2,-3,1) is (4i-1)/(-3), not (4i-1)/3; the printed sign is dropped",
    "C^-1 = -1/2 G^-1 since C = -2 G; the printed C^-1 = 1/2 G^-1 omits the sign",
)


class MalformedLine(ValueError):
    def __init__(self, lineno: int, content: str):
        super().__init__(f"line {lineno}: cannot parse {content!r}")
        self.lineno = lineno
        self.content = content


@dataclass(frozen=True)
class CatbertMatrix:
    n: int
    matrix: ExactMatrix


def catbert_matrix(n: int) -> CatbertMatrix:
    """C(n) with entries 1/Cat_{i+j}, cross-checked against -2 G^(1,-3/2)(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    cat = catalan_numbers(2 * n - 1)
    direct = ExactMatrix([[Fraction(1, cat[i + j]) for j in range(n)] for i in range(n)])
    if direct != hankel_G(CATBERT, n).scale(-2):
        raise ArithmeticError("reciprocal-Catalan matrix disagrees with -2 G^(1,-3/2)")
    return CatbertMatrix(n, direct)


def catbert_inverse(n: int) -> ExactMatrix:
    inv = inverse_via_LMK(CATBERT, n).scale(Fraction(-1, 2))
    if matmul(catbert_matrix(n).matrix, inv) != ExactMatrix.identity(n):
        raise ArithmeticError("C @ C^-1 != I")
    return inv


def catbert_det_formula(n: int) -> Fraction:
    """prod_{k<n} 4^(2k+1) (4k-1)/6 binom(2k-3/2, k) binom(2k-3/2, k+1)."""
    from .exact import binom_rational

    out = Fraction(1)
    for k in range(n):
        top = 2 * k - Fraction(3, 2)
        out *= 4 ** (2 * k + 1) * Fraction(4 * k - 1, 6) * binom_rational(top, k) * binom_rational(top, k + 1)
    return out


def catbert_det_via_general(n: int) -> Fraction:
    return Fraction(-1, 2) ** n * det_inverse_formula(CATBERT, n)


def catbert_det_sequence(count: int) -> list[int]:
    """det(C(n)^-1) for n = 1 .. count."""
    out = []
    for n in range(1, count + 1):
        d = catbert_det_formula(n)
        if d.denominator != 1:
            raise ArithmeticError(f"det(C({n})^-1) = {d} is not an integer")
        out.append(d.numerator)
    return out


# b-files -----------------------------------------------------------------


@dataclass(frozen=True)
class BFile:
    sequence_id: str
    entries: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


def parse_bfile(text: str, sequence_id: str = "") -> BFile:
    """Parse OEIS b-file text: "index value" per line, '#' comments and blanks skipped."""
    entries = []
    last = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(lineno, raw)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(lineno, raw) from None
        if last is not None and index <= last:
            raise MalformedLine(lineno, raw)
        last = index
        entries.append((index, value))
    return BFile(sequence_id, tuple(entries))


def load_snapshot() -> BFile:
    text = resources.files("gencatalan").joinpath("data/b296056.txt").read_text()
    return parse_bfile(text, SEQUENCE_ID)


def fetch_bfile(sequence_id: str = SEQUENCE_ID, timeout: float = 10.0, url_template: str | None = None) -> BFile:
    """Download a live b-file. Only called when explicitly requested."""
    template = url_template or os.environ.get(URL_ENV_VAR, DEFAULT_URL_TEMPLATE)
    url = template.format(id=sequence_id, digits=sequence_id.lstrip("A"))
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        return parse_bfile(resp.read().decode("utf-8"), sequence_id)


def _prefix_match(computed, table: dict, offset: int) -> tuple[int, tuple | None]:
    for j, value in enumerate(computed):
        idx = j + offset
        if idx not in table:
            return j, None
        if table[idx] != value:
            return j, (idx, value, table[idx])
    return len(computed), None


def oeis_compare(computed: list[int], bfile: BFile, offset: int | None = None, offsets=range(3)) -> dict:
    """Longest matching prefix of ``computed`` against the b-file.

    ``computed[j]`` is compared to the b-file term at index ``j + offset``. If
    ``offset`` is None, every candidate in ``offsets`` is tried and the one
    with the longest match wins (ties go to the smaller offset).
    """
    table = bfile.as_dict()
    candidates = [offset] if offset is not None else list(offsets)
    best = None
    for off in candidates:
        length, mismatch = _prefix_match(computed, table, off)
        if best is None or length > best[1]:
            best = (off, length, mismatch)
    off, length, mismatch = best
    return {
        "sequence_id": bfile.sequence_id,
        "offset": off,
        "matched": length,
        "compared": len(computed),
        "full_match": length == len(computed),
        "first_mismatch": None if mismatch is None else {
            "index": mismatch[0], "computed": mismatch[1], "bfile": mismatch[2],
        },
    }


def catbert_report(n_max: int) -> Report:
    """All Catbert checks up to size n_max, with the known misprints noted."""
    from .matrices import det_oracle, is_integer_matrix

    report = Report("catbert", CATBERT, n_max, notes=list(ERRATA))
    for n in range(1, n_max + 1):
        inv = catbert_inverse(n)
        integral, _ = is_integer_matrix(inv)
        report.check(("integer", n), integral, True)
        d = catbert_det_formula(n)
        report.check(("det-oracle", n), d, det_oracle(inv))
        report.check(("det-general", n), d, catbert_det_via_general(n))
    return report
