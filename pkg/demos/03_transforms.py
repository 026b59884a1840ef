"""Pruned transform, cross sections, and what the pruning buys.

A GF(2)[x] polynomial is fixed by squaring, so its value at w^2 is the
square of its value at w: one representative per Frobenius orbit carries
the whole evaluation.  The pruned transform visits only those
representatives and its arithmetic narrows to the subfield each value
lives in.
"""

import random

from fafft import FaftEngine, OpCounters, count_ops, n_cross_section

eng = FaftEngine(6)

# The m=5 cross section: 8 points stand in for all 32 evaluations.
m = 5
pts = eng.cross_section(m)
print(f"cross section at m={m} ({len(pts)} of {1 << m} points):")
for pt in pts:
    print(f"  point {pt.index:2d}  orbit size {pt.orbit}  value in GF(2^{pt.orbit})")

# Transform a random polynomial and check the claimed value widths.
rng = random.Random(3)
f = rng.getrandbits(1 << m)
res = eng.faft(f, m)
print(f"\nvalues of a random degree<{1 << m} polynomial at the cross section:")
print("  " + " ".join(f"{v:02x}" for v in res.values))
assert all(v < (1 << pt.orbit) for pt, v in zip(pts, res.values))

# Walking each orbit (value squares when the point squares) rebuilds the
# full 32-point evaluation, matching the unpruned transform.
full = eng.expand_to_full_aft(m, res.values)
print(f"expanded to all {len(full)} points; first eight: "
      + " ".join(f"{v:02x}" for v in full[:8]))

# And the transform inverts exactly.
assert eng.ifaft(res.values, m) == f
print("inverse transform recovers the input: True")

# The savings, in numbers: surviving points and width-weighted work.
print("\n  m    points kept   weighted mults   bound n*m/2")
for m in (8, 12, 16):
    n = 1 << m
    c = count_ops(m)
    print(f" {m:3d}  {n_cross_section(m):6d}/{n:<6d}  {c.weighted_mults:12d}   {n * m // 2:10d}")

# Counters from an instrumented run agree with the structural count.
m = 8
got = OpCounters()
eng.fafft_leaves(m, [rng.getrandbits(1) for _ in range(1 << m)], got)
print(f"\ninstrumented m={m} run: {got}")
print(f"structural count:       {count_ops(m)}")
