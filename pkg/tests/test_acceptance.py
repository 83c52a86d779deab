"""Exit criteria. Every check is exact rational equality, zero tolerance."""

import pytest

from gencatalan import factorization as fz
from gencatalan.bench import records_to_csv, records_to_json, run_bench
from gencatalan.catbert import (
    catbert_det_formula,
    catbert_det_sequence,
    catbert_inverse,
    load_snapshot,
    oeis_compare,
)
from gencatalan.matrices import ExactMatrix, det_oracle, hankel_G, invert_oracle, is_integer_matrix
from gencatalan.numbertheory import (
    build_divisibility_certificate,
    certificates_imply_integrality,
    lucas_scan,
    lucas_var1_scan,
    lucas_var2_scan,
    lucas_var3_scan,
)
from gencatalan.params import CATBERT, param_grid
from gencatalan.sequences import check_shift_recurrences, gen_catalan

GRID = param_grid()


@pytest.fixture
def criterion(record_property):
    def tag(name):
        record_property("criterion", name)

    return tag


def test_01_sequences(criterion):
    criterion("1. generalized Catalan sequences integral; Catbert prefix 1,-2,-2,-4,-10")
    assert gen_catalan(CATBERT, 5).terms == (1, -2, -2, -4, -10)
    for params in GRID:
        terms = gen_catalan(params, 60).terms
        assert len(terms) == 60 and all(isinstance(t, int) and t != 0 for t in terms)


def test_02_shift_recurrences(criterion):
    criterion("2. shift recurrences hold for n < 60 on the grid")
    for params in GRID:
        assert check_shift_recurrences(params, 60).ok


def test_03_three_term(criterion):
    criterion("3. three-term recurrence for n <= 10, all k, on the grid")
    for params in GRID:
        report = fz.verify_three_term(params, 12)
        assert report.ok, report.summary()


def test_04_orthogonality_and_norm(criterion):
    criterion("4. L G L^T diagonal and equal to N^-1 for n <= 12 on the grid")
    for params in GRID:
        assert fz.verify_orthogonality(params, 12).ok
        assert fz.verify_norm(params, 12).ok


def test_05_nl_eq_mk(criterion):
    criterion("5. N L = M K entrywise for n <= 12 on the grid")
    for params in GRID:
        assert fz.verify_NL_eq_MK(params, 12).ok


def test_06_inverse(criterion):
    criterion("6. L^T M K equals the elimination inverse and G G^-1 = I for n <= 10")
    for params in GRID:
        for n in range(1, 11):
            G = hankel_G(params, n)
            fast = fz.inverse_via_LMK(params, n)
            assert fast == invert_oracle(G)
            assert G @ fast == ExactMatrix.identity(n)


def test_07_integrality(criterion):
    criterion("7. G^-1 integral for |q| <= 2 and q G^-1 integral for all grid members, n <= 10")
    for params in GRID:
        for n in range(1, 11):
            assert is_integer_matrix(fz.scaled_inverse(params, n))[0]
            if abs(params.q) <= 2:
                assert is_integer_matrix(fz.inverse_via_LMK(params, n))[0]


def test_08_determinants(criterion):
    criterion("8. determinant formulas match elimination for n <= 10; anchors -2 and -8")
    assert fz.det_inverse_formula(CATBERT, 1) == -2
    assert fz.det_inverse_formula(CATBERT, 2) == -8
    for params in GRID:
        for n in range(1, 11):
            assert fz.det_inverse_formula(params, n) == det_oracle(fz.inverse_via_LMK(params, n))
            assert fz.det_scaled_inverse_formula(params, n) == det_oracle(fz.scaled_inverse(params, n))
            assert fz.det_inverse_formula(params, n) * det_oracle(hankel_G(params, n)) == 1


def test_09_catbert(criterion):
    criterion("9. Catbert inverse integral, C(2)^-1 and det, det formula, b-file prefix")
    assert catbert_inverse(2) == ExactMatrix([[-1, 2], [2, -2]])
    assert det_oracle(catbert_inverse(2)) == -2
    for n in range(1, 16):
        inv = catbert_inverse(n)
        assert is_integer_matrix(inv)[0]
        assert catbert_det_formula(n) == det_oracle(inv)
    result = oeis_compare(catbert_det_sequence(15), load_snapshot())
    assert result["full_match"], result


def test_10_lucas(criterion):
    criterion("10. Lucas lemma and its three variations, zero violations")
    for p in (2, 3, 5):
        assert lucas_scan(p, 200).ok
    for q, p in ((3, 2), (2, 3), (5, 2), (3, 4)):
        assert lucas_var1_scan(q, p, 120, 60).ok
    assert lucas_var2_scan(120, 120).ok
    for p, q in ((2, -3), (3, 2), (5, -2)):
        assert lucas_var3_scan(p, q, -50, 50, 60).ok


def test_11_certificates(criterion):
    criterion("11. every summand certified for Catbert (2, 3) and |q| = 2 (2), agreeing with direct integrality")
    cases = [(CATBERT, (2, 3))] + [(p, (2,)) for p in GRID if abs(p.q) == 2]
    for params, primes in cases:
        for n in range(1, 9):
            for t in primes:
                certs = build_divisibility_certificate(params, n, t)
                assert len(certs) == n * n * (n + 1) // 2
                assert all(c.verified for c in certs)
            assert certificates_imply_integrality(params, n)
            inv = fz.inverse_via_LMK(params, n)
            if params == CATBERT:
                inv = catbert_inverse(n)
            assert is_integer_matrix(inv)[0]


def test_12_bench(criterion):
    criterion("12. bench harness passes its correctness gate at n = 8, 16, 24, 32")
    records = run_bench(CATBERT, [8, 16, 24, 32], repetitions=1)
    assert [(r.method, r.n) for r in records] == [
        (m, n) for m in ("elimination", "factorized") for n in (8, 16, 24, 32)
    ]
    assert records_to_csv(records).count("\n") == 9
    assert records_to_json(records).startswith("[")
