"""Tour of the field tower.

GF(2^64) is built as a height-6 tower: each storey adjoins a generator u_j
with u_j^2 + u_j = (product of all previous generators).  The products of
generator subsets form a basis v_0, v_1, v_2, ... whose index arithmetic is
plain binary, so a field element is just an int with bit i standing for v_i.
This script pokes at the consequences.
"""

from fafft import CantorField

field = CantorField(6)
print(f"field: GF(2^{field.d}), elements are ints below 2^{field.d}")

# v_i is the int 1 << i.  The first few basis products:
for i in range(5):
    gens = [j for j in range(6) if (i >> j) & 1]
    prod = " * ".join(f"u_{j}" for j in gens) or "1"
    print(f"  v_{i} = {prod:12s} = {1 << i:#x}")

# Addition is XOR.  Multiplication follows the tower relations.
a, b = 0x13, 0x2A
print(f"\na = {a:#x}, b = {b:#x}")
print(f"a + b = {a ^ b:#x}")
print(f"a * b = {field.mul(a, b):#x}")
print(f"a * a^-1 = {field.mul(a, field.inverse(a)):#x}")

# The storeys nest: ints below 2^(2^j) form the subfield GF(2^(2^j)).
# Products never escape the smallest storey containing both factors.
print("\nsubfield closure:")
for j in range(1, 4):
    w = 1 << j
    top = (1 << w) - 1
    closed = all(
        field.mul(x, y) <= top for x in range(top + 1) for y in range(top + 1)
    )
    print(f"  GF(2^{w}): products of all {top + 1}^2 pairs stay inside: {closed}")

# Squaring (the Frobenius map) is GF(2)-linear on the basis, and an element
# sits in GF(2^(2^j)) exactly when 2^(2^j) squarings fix it.
x = 0x5D
orbit = [x]
y = field.frobenius(x)
while y != x:
    orbit.append(y)
    y = field.frobenius(y)
print(f"\nFrobenius orbit of {x:#x} has size {len(orbit)}:")
print("  " + " -> ".join(f"{v:#x}" for v in orbit))
print(f"so {x:#x} generates GF(2^{len(orbit)}), the smallest storey holding it")
