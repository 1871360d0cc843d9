"""
How the four methods scale with d
=================================

Wall times only; nothing is asserted.  The L'Hopital route carries the
largest intermediate expressions and grows fastest.
"""

import json

from powersums.cli import bench_records, run_bench

print(run_bench(12))

records = bench_records(20)
slowest = {}
for r in records:
    if r["d"] == 20:
        slowest[r["method"]] = r["micros"]
print(json.dumps(slowest, indent=2))
