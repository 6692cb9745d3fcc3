"""Walkthrough: measured comparison counts next to the query lower bounds.

The bounds count log_6 of the number of distinguishable inputs; the
deciders use ordinary three-outcome comparisons, so counts sit well above
the bounds but share the N log N shape.
"""

import sys

from coverpierce import (
    bound_report,
    lb_piercing,
    lb_union,
    lb_union_ceil,
    run_bench,
    write_bench_csv,
)

for n in (4, 8, 16, 64, 256):
    print(f"N={n:4d}  lb_union={lb_union(n):8.3f}  "
          f"ceil={lb_union_ceil(n):3d}  lb_piercing={lb_piercing(n):8.3f}")

rep = bound_report(8)
print("\nbound basis:", rep.basis)

# A small deterministic sweep: chain coverage and random piercing.
records = run_bench(["chain", "random-piercing"], [8, 32, 128], trials=3, seed=0)
print("\nfamily           N   trial  comparisons  lower bound")
for r in records:
    print(f"{r.family:15s} {r.n:4d} {r.trial:6d} {r.comparisons:12d} "
          f"{r.lower_bound:12.3f}")

# The same records in the CSV shape the CLI emits.
print()
write_bench_csv(records[:4], sys.stdout)
