"""From the multiplication pipeline to a flat XOR/AND circuit.

For fixed operand size the whole pipeline is a straight-line program: the
linear stages become XOR networks, and only the lane-by-lane field products
contribute AND gates.  The generator traces the pipeline symbolically, runs
greedy common-subexpression elimination over the constant-matrix stages,
sweeps dead code, and the verifier replays the result against convolution.
"""

from fafft import eval_slp, gen_mul_circuit, parse_slp, verify_slp

# A tiny instance first: multiply two 4-bit polynomials.
circ = gen_mul_circuit(4)
print(f"n=4 circuit: {circ.and_count} AND, {circ.xor_count} XOR, "
      f"{len(circ.outputs)} output coefficients")

text = circ.to_slp()
lines = text.splitlines()
print("\nfirst SLP lines:")
for line in lines[:6]:
    print(f"  {line}")
print(f"  ... {len(lines) - 6} more")

# The text form parses back and evaluates like the original.
back = parse_slp(text)
a, b = 0b1011, 0b0110
got = eval_slp(back, [(a >> i) & 1 for i in range(4)], [(b >> i) & 1 for i in range(4)])
c = sum(bit << i for i, bit in enumerate(got))
print(f"\nevaluating on a={a:#06b}, b={b:#06b}: product {c:#b}")

# Exhaustive verification is feasible at this size (all 256 input pairs).
rep = verify_slp(circ)
print(f"verify n=4: ok={rep.ok} exhaustive={rep.exhaustive}")

# Bigger instances: gate totals and randomized verification.
print("\n     n     AND      XOR    total   per-bit")
for n in (16, 64, 128, 256):
    circ = gen_mul_circuit(n)
    rep = verify_slp(circ, trials=2000, seed=5)
    assert rep.ok
    total = circ.and_count + circ.xor_count
    print(f"  {n:4d}  {circ.and_count:6d}  {circ.xor_count:7d}  {total:7d}  {total / n:8.1f}")
print("\nAND gates come only from the lane products; everything else is XOR")
