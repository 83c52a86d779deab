"""Timing harness: factorized L^T M K inverse vs fraction-free elimination.

Runs single-threaded. Outputs of both methods are compared before any timing
is reported; a mismatch aborts the run.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from dataclasses import asdict, dataclass

from .factorization import build_K, build_L, build_M, lmk_product
from .matrices import ExactMatrix, hankel_G, invert_oracle
from .params import GCParams


class BenchMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class BenchRecord:
    method: str
    p: int
    q: int
    a: int
    n: int
    median_seconds: float
    max_bits: int
    result_bits: int
    multiplies: int | None = None


def _factorized(params, n):
    # bypass the caches so every repetition does the full work
    L = build_L.__wrapped__(params, n)
    K = build_K.__wrapped__(params, n)
    M = build_M(params, n)
    inv = lmk_product(L, M, K)
    mbits = max(max(m.numerator.bit_length(), m.denominator.bit_length()) for m in M)
    return inv, max(L.max_bits(), K.max_bits(), mbits, inv.max_bits())


def _elimination(params, n):
    stats = {}
    inv = invert_oracle(hankel_G(params, n), stats=stats, check=False)
    return inv, max(stats.get("max_bits", 0), inv.max_bits())


METHODS = {"factorized": _factorized, "elimination": _elimination}


def _first_difference(A: ExactMatrix, B: ExactMatrix):
    for i in range(A.rows):
        for j in range(A.cols):
            if A[i, j] != B[i, j]:
                return i, j, A[i, j], B[i, j]
    return None


def run_bench(params: GCParams, n_list, repetitions: int = 3) -> list[BenchRecord]:
    n_list = list(n_list)
    if n_list != sorted(n_list):
        raise ValueError("n_list must be ascending")
    records = []
    for n in n_list:
        fast, _ = _factorized(params, n)
        slow, _ = _elimination(params, n)
        diff = _first_difference(fast, slow)
        if diff is not None:
            i, j, x, y = diff
            raise BenchMismatch(f"n={n}: entry ({i},{j}) factorized={x} elimination={y}")
        for method, fn in METHODS.items():
            times, bits = [], 0
            for _ in range(repetitions):
                t0 = time.perf_counter()
                inv, bits = fn(params, n)
                times.append(time.perf_counter() - t0)
            records.append(BenchRecord(
                method, params.p, params.q, params.a, n,
                statistics.median(times), bits, inv.max_bits(),
            ))
    records.sort(key=lambda r: (r.method, r.n))
    return records


def records_to_csv(records) -> str:
    buf = io.StringIO()
    fields = list(BenchRecord.__dataclass_fields__)
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(asdict(r))
    return buf.getvalue()


def records_to_json(records, **kwargs) -> str:
    return json.dumps([asdict(r) for r in records], **kwargs)


def format_table(records) -> str:
    lines = [f"{'method':<12}{'n':>5}{'median s':>12}{'max bits':>10}{'result bits':>13}"]
    for r in records:
        lines.append(f"{r.method:<12}{r.n:>5}{r.median_seconds:>12.5f}{r.max_bits:>10}{r.result_bits:>13}")
    return "\n".join(lines)
