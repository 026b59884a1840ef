"""GF(2)[x] multiplication routes."""

import random

import pytest

from fafft.mul import mul, mul_fafft, mul_karatsuba, mul_schoolbook


def conv_naive(a: int, b: int) -> int:
    """Bit-by-bit convolution, the smallest possible oracle."""
    out = 0
    i = 0
    while a >> i:
        if (a >> i) & 1:
            out ^= b << i
        i += 1
    return out


ALL = (mul_schoolbook, mul_karatsuba, mul_fafft)


def test_pinned():
    # (x^3 + x + 1)(x^3 + x^2 + 1) = x^6 + ... + 1
    for f in ALL:
        assert f(0xB, 0xD) == 0x7F


def test_exhaustive_small():
    for a in range(16):
        for b in range(16):
            want = conv_naive(a, b)
            for f in ALL:
                assert f(a, b) == want


def test_monomials():
    for i, j in ((0, 0), (1, 5), (17, 40), (100, 200)):
        for f in ALL:
            assert f(1 << i, 1 << j) == 1 << (i + j)


def test_zero_and_identity():
    rng = random.Random(61)
    for f in ALL:
        for _ in range(5):
            a = rng.getrandbits(200)
            assert f(a, 0) == 0
            assert f(0, a) == 0
            assert f(a, 1) == a
            assert f(1, a) == a


def test_routes_agree_random():
    rng = random.Random(62)
    for bits in (64, 200, 1000, 5000, 20000):
        for _ in range(4):
            a = rng.getrandbits(bits) | (1 << (bits - 1))
            b = rng.getrandbits(bits // 2 + 1) | 1
            want = mul_schoolbook(a, b)
            assert mul_karatsuba(a, b) == want
            assert mul_fafft(a, b) == want


def test_uneven_operands():
    rng = random.Random(63)
    for _ in range(10):
        a = rng.getrandbits(3000)
        b = rng.getrandbits(17) | 1
        assert mul_fafft(a, b) == mul_schoolbook(a, b)


def test_degree_additivity():
    rng = random.Random(64)
    for _ in range(20):
        a = rng.getrandbits(300) | (1 << 299)
        b = rng.getrandbits(150) | (1 << 149)
        c = mul_fafft(a, b)
        assert c.bit_length() == 300 + 150 - 1


def test_ring_properties():
    rng = random.Random(65)
    for _ in range(10):
        a = rng.getrandbits(500)
        b = rng.getrandbits(500)
        c = rng.getrandbits(500)
        assert mul_fafft(a, b) == mul_fafft(b, a)
        assert mul_fafft(a, b ^ c) == mul_fafft(a, b) ^ mul_fafft(a, c)
    # associativity on smaller operands (three-way products)
    for _ in range(5):
        a = rng.getrandbits(80)
        b = rng.getrandbits(80)
        c = rng.getrandbits(80)
        assert mul_fafft(mul_fafft(a, b), c) == mul_fafft(a, mul_fafft(b, c))


def test_dispatch():
    assert mul(0xB, 0xD, "schoolbook") == 0x7F
    assert mul(0xB, 0xD, "karatsuba") == 0x7F
    assert mul(0xB, 0xD, "fafft") == 0x7F
    with pytest.raises(ValueError):
        mul(1, 1, "fft")
    with pytest.raises(ValueError):
        mul(-1, 1)
