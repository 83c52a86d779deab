"""Divisibility scans and the factorized-vs-elimination benchmark."""

from gencatalan.bench import format_table, run_bench
from gencatalan.numbertheory import lucas_scan, lucas_var1_scan, lucas_var2_scan, lucas_var3_scan
from gencatalan.params import CATBERT

for report in (
    lucas_scan(3, 100),
    lucas_var1_scan(3, 2, 60, 30),
    lucas_var2_scan(60),
    lucas_var3_scan(2, -3, -20, 20, 30),
):
    print(report.summary(), f"({report.checked} checks)")

print()
print(format_table(run_bench(CATBERT, [8, 16, 24, 32], repetitions=3)))
