"""Multiplying GF(2)[x] polynomials three ways.

The pipeline behind mul_fafft: convert both inputs to the subspace-product
coefficient basis, evaluate at one point per Frobenius orbit, multiply the
value vectors lane by lane, and invert.  Everything before and after the
lane products is GF(2)-linear.

Run time grows just past linearly in the product size, so the crossover
against the byte-windowed schoolbook baseline arrives quickly.
"""

import random
import statistics
import time

from fafft import mul, mul_fafft, mul_karatsuba, mul_schoolbook

rng = random.Random(4)

# Small enough to eyeball: (x^3 + x + 1) * (x^2 + x) in bit form.
a, b = 0b1011, 0b110
print(f"a = {a:#06b}, b = {b:#06b}")
print(f"a * b = {mul(a, b):#b} (schoolbook agrees: {mul_schoolbook(a, b):#b})")

# The three methods agree on random operands.
for bits in (100, 1000, 10_000):
    x = rng.getrandbits(bits) | (1 << (bits - 1))
    y = rng.getrandbits(bits) | (1 << (bits - 1))
    want = mul_schoolbook(x, y)
    assert mul_fafft(x, y) == want
    assert mul_karatsuba(x, y) == want
print("\nfafft, karatsuba, schoolbook agree on random operands up to 10^4 bits")


def median_ms(fn, x, y, reps=5):
    fn(x, y)  # warm any cached plan
    ts = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn(x, y)
        ts.append(time.perf_counter() - t0)
    return statistics.median(ts) * 1e3


print("\nmedian runtime, ms (operands of n/2 bits each):")
print("  product bits      fafft  karatsuba  schoolbook")
for m in (14, 16, 18):
    h = 1 << (m - 1)
    x = rng.getrandbits(h) | (1 << (h - 1))
    y = rng.getrandbits(h) | (1 << (h - 1))
    row = [median_ms(f, x, y) for f in (mul_fafft, mul_karatsuba, mul_schoolbook)]
    print(f"  2^{m}         {row[0]:9.2f}  {row[1]:9.2f}  {row[2]:10.2f}")
