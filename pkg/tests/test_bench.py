import json

import pytest

from gencatalan import bench
from gencatalan.matrices import ExactMatrix
from gencatalan.params import CATBERT, GCParams


def test_records_sorted_and_complete():
    records = bench.run_bench(CATBERT, [1, 3, 5], repetitions=1)
    assert [(r.method, r.n) for r in records] == sorted((m, n) for m in ("elimination", "factorized") for n in (1, 3, 5))
    assert all(r.median_seconds >= 0 and r.max_bits >= r.result_bits for r in records)


def test_n1_both_methods():
    fast, _ = bench._factorized(CATBERT, 1)
    slow, _ = bench._elimination(CATBERT, 1)
    assert fast == slow == ExactMatrix([[-2]])


def test_descending_rejected():
    with pytest.raises(ValueError):
        bench.run_bench(CATBERT, [4, 2])


def test_mismatch_aborts(monkeypatch):
    monkeypatch.setattr(bench, "_factorized", lambda params, n: (ExactMatrix.identity(n), 1))
    with pytest.raises(bench.BenchMismatch):
        bench.run_bench(GCParams(3, 2), [2], repetitions=1)


def test_serialization():
    records = bench.run_bench(GCParams(3, 2), [2], repetitions=1)
    data = json.loads(bench.records_to_json(records))
    assert {d["method"] for d in data} == {"factorized", "elimination"}
    assert bench.records_to_csv(records).count("\n") == 3
    assert "factorized" in bench.format_table(records)
