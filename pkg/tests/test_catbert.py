from fractions import Fraction as F

import pytest

from gencatalan.catbert import (
    MalformedLine,
    catbert_det_formula,
    catbert_det_sequence,
    catbert_det_via_general,
    catbert_inverse,
    catbert_matrix,
    catbert_report,
    load_snapshot,
    oeis_compare,
    parse_bfile,
)
from gencatalan.matrices import ExactMatrix, det_oracle, hankel_G, is_integer_matrix
from gencatalan.params import CATBERT

from oracles import catalan_convolution, leibniz_det


def test_catbert_matrix_small():
    assert catbert_matrix(2).matrix == ExactMatrix([[1, 1], [1, F(1, 2)]])
    assert catbert_matrix(5).matrix[0, 0] == 1
    assert catbert_matrix(4).matrix == hankel_G(CATBERT, 4).scale(-2)


def test_catbert_matrix_reciprocal_catalan():
    cat = catalan_convolution(20)
    C = catbert_matrix(10).matrix
    assert all(C[i, j] == F(1, cat[i + j]) for i in range(10) for j in range(10))


def test_catbert_inverse_small():
    assert catbert_inverse(1) == ExactMatrix([[1]])
    assert catbert_inverse(2) == ExactMatrix([[-1, 2], [2, -2]])


@pytest.mark.parametrize("n", range(1, 16))
def test_catbert_inverse_integral(n):
    assert is_integer_matrix(catbert_inverse(n))[0]


def test_det_formula_examples():
    assert catbert_det_formula(0) == 1
    assert catbert_det_formula(1) == 1
    assert catbert_det_formula(2) == -2
    assert leibniz_det([[-1, 2], [2, -2]]) == -2


@pytest.mark.parametrize("n", range(1, 16))
def test_det_formula_vs_oracle(n):
    d = catbert_det_formula(n)
    assert d == det_oracle(catbert_inverse(n))
    assert d == 1 / det_oracle(catbert_matrix(n).matrix)
    assert d == catbert_det_via_general(n)


def test_report_carries_errata():
    report = catbert_report(4)
    assert report.ok and len(report.notes) == 2


def test_parse_bfile():
    bf = parse_bfile("# comment\n1 1\n2 -2\n")
    assert bf.entries == ((1, 1), (2, -2))
    assert parse_bfile("\n\n# only\n").entries == ()


def test_parse_bfile_errors():
    with pytest.raises(MalformedLine) as exc:
        parse_bfile("1 1\n2 -2\n3 x\n")
    assert exc.value.lineno == 3
    with pytest.raises(MalformedLine):
        parse_bfile("2 1\n1 1\n")
    with pytest.raises(MalformedLine):
        parse_bfile("1 2 3\n")


def test_compare_examples():
    bf = parse_bfile("# comment\n1 1\n2 -2\n")
    result = oeis_compare([1, -2], bf, offset=1)
    assert result["full_match"] and result["matched"] == 2
    auto = oeis_compare([1, -2], bf)
    assert auto["offset"] == 1 and auto["full_match"]


def test_compare_reports_mismatch():
    bf = parse_bfile("0 1\n1 1\n2 5\n")
    result = oeis_compare([1, 1, 2], bf, offset=0)
    assert not result["full_match"]
    assert result["matched"] == 2
    assert result["first_mismatch"] == {"index": 2, "computed": 2, "bfile": 5}


def test_snapshot_matches_formula():
    snap = load_snapshot()
    result = oeis_compare(catbert_det_sequence(20), snap)
    assert result["full_match"] and result["offset"] == 1
