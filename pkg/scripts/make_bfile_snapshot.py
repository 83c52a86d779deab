"""Regenerate src/gencatalan/data/b296056.txt by fraction-free elimination.

The values come from 1 / det(C(n)) computed with Bareiss elimination on the
reciprocal-Catalan matrix, independently of the closed-form product. Replace
the file with the official OEIS b-file when network access is available.
"""

import argparse
from fractions import Fraction
from pathlib import Path

from gencatalan.matrices import ExactMatrix, det_oracle
from gencatalan.sequences import catalan_numbers

OUT = Path(__file__).resolve().parents[1] / "src" / "gencatalan" / "data" / "b296056.txt"


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--count", type=int, default=20)
    args = parser.parse_args()
    cat = catalan_numbers(2 * args.count)
    lines = [
        "# A296056: determinant of the inverse of the n x n Hankel matrix of reciprocal Catalan numbers.",
        "# Local snapshot, n = 1..%d, computed as 1/det(C(n)) by fraction-free elimination." % args.count,
        "# Not downloaded from oeis.org; regenerate with scripts/make_bfile_snapshot.py.",
    ]
    for n in range(1, args.count + 1):
        C = ExactMatrix([[Fraction(1, cat[i + j]) for j in range(n)] for i in range(n)])
        d = 1 / det_oracle(C)
        assert d.denominator == 1
        lines.append(f"{n} {d.numerator}")
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
