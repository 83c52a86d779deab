"""Dense exact matrices, Hankel construction, and elimination oracles."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from math import lcm

from .exact import as_rational, format_rational
from .params import GCParams
from .sequences import gen_catalan


class DimensionMismatch(ValueError):
    pass


class SingularMatrix(ArithmeticError):
    pass


class ExactMatrix:
    """Immutable dense matrix of Fractions, stored row-major as nested tuples."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        self._rows = rows

    @classmethod
    def _wrap(cls, rows):
        # trusted constructor: rows already tuples of Fractions
        m = object.__new__(cls)
        m._rows = rows
        return m

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls._wrap(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls._wrap(tuple((Fraction(0),) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in self._rows)
        return f"ExactMatrix([{body}])"

    def __matmul__(self, other):
        return matmul(self, other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "ExactMatrix":
        c = as_rational(c)
        return ExactMatrix._wrap(tuple(tuple(c * x for x in r) for r in self._rows))

    @property
    def T(self) -> "ExactMatrix":
        return transpose(self)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == transpose(self)

    def max_bits(self) -> int:
        """Largest bit length over all numerators and denominators."""
        return max(
            max(x.numerator.bit_length(), x.denominator.bit_length()) for r in self._rows for x in r
        )

    # serialization ------------------------------------------------------

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self._rows]

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_strings(), **kwargs)

    @classmethod
    def from_json(cls, text: str) -> "ExactMatrix":
        data = json.loads(text)
        return cls([[Fraction(s) for s in r] for r in data])

    def to_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.to_strings())
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "ExactMatrix":
        return cls([[Fraction(s) for s in r] for r in csv.reader(io.StringIO(text)) if r])


def matmul(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    bcols = tuple(zip(*B._rows))
    out = []
    for r in A._rows:
        out.append(tuple(sum((x * y for x, y in zip(r, c) if x and y), Fraction(0)) for c in bcols))
    return ExactMatrix._wrap(tuple(out))


def transpose(A: ExactMatrix) -> ExactMatrix:
    return ExactMatrix._wrap(tuple(zip(*A._rows)))


def diag_from(values) -> ExactMatrix:
    values = [as_rational(v) for v in values]
    n = len(values)
    zero = Fraction(0)
    return ExactMatrix._wrap(
        tuple(tuple(values[i] if i == j else zero for j in range(n)) for i in range(n))
    )


def hankel_G(params: GCParams, n: int) -> ExactMatrix:
    """n x n Hankel matrix with entries 1 / g_{i+j+a}."""
    if n < 1:
        raise ValueError("n must be positive")
    g = gen_catalan(params, 2 * n - 1 + params.a)
    a = params.a
    recip = [Fraction(1, g[k]) for k in range(len(g))]
    return ExactMatrix._wrap(tuple(tuple(recip[i + j + a] for j in range(n)) for i in range(n)))


def _cleared_rows(A: ExactMatrix) -> tuple[list[list[int]], list[int]]:
    """Multiply each row by the lcm of its denominators; return integer rows and the factors."""
    rows, factors = [], []
    for r in A._rows:
        d = lcm(*(x.denominator for x in r))
        rows.append([int(x * d) for x in r])
        factors.append(d)
    return rows, factors


def _track(stats, value):
    if stats is not None:
        b = abs(value).bit_length()
        if b > stats.get("max_bits", 0):
            stats["max_bits"] = b


def det_oracle(A: ExactMatrix, stats: dict | None = None) -> Fraction:
    """Determinant by Bareiss elimination on the denominator-cleared matrix.

    Pivoting takes the first nonzero entry in the column; the sign of each row
    swap is tracked. If ``stats`` is a dict, the largest intermediate integer
    bit length is recorded under ``"max_bits"``.
    """
    if not A.is_square():
        raise DimensionMismatch("determinant needs a square matrix")
    M, factors = _cleared_rows(A)
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - f * rk[j]) // prev
                _track(stats, ri[j])
            ri[k] = 0
        prev = pivot
    scale = 1
    for d in factors:
        scale *= d
    return Fraction(sign * M[n - 1][n - 1], scale)


def invert_oracle(A: ExactMatrix, stats: dict | None = None, check: bool = True) -> ExactMatrix:
    """Exact inverse by fraction-free Gauss-Jordan elimination.

    The row-scaled integer matrix A' = D A is reduced alongside the identity;
    at the end the left block is det(A') * I and the right block the matching
    adjugate, so A^-1 = adj(A') D / det(A'). With ``check`` the product
    A @ A^-1 is compared against the identity before returning.
    """
    if not A.is_square():
        raise DimensionMismatch("inverse needs a square matrix")
    M, factors = _cleared_rows(A)
    n = len(M)
    for i in range(n):
        M[i].extend(1 if j == i else 0 for j in range(n))
    width = 2 * n
    prev = 1
    for k in range(n):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    break
            else:
                raise SingularMatrix(f"no pivot in column {k}")
        pivot = M[k][k]
        rk = M[k]
        for i in range(n):
            if i == k:
                continue
            ri = M[i]
            f = ri[k]
            for j in range(width):
                if j == k:
                    continue
                ri[j] = (pivot * ri[j] - f * rk[j]) // prev
                _track(stats, ri[j])
            ri[k] = 0
        prev = pivot
    det = M[0][0]
    inv = ExactMatrix._wrap(
        tuple(tuple(Fraction(M[i][n + j] * factors[j], det) for j in range(n)) for i in range(n))
    )
    if check and matmul(A, inv) != ExactMatrix.identity(n):
        raise ArithmeticError("elimination inverse failed the A @ A^-1 == I check")
    return inv


def is_integer_matrix(A: ExactMatrix) -> tuple[bool, list[tuple[int, int, Fraction]]]:
    offenders = [
        (i, j, x) for i, r in enumerate(A._rows) for j, x in enumerate(r) if x.denominator != 1
    ]
    return not offenders, offenders
