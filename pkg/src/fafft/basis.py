"""Conversion between the monomial basis and the subspace-product basis.

Basis element X_t is the product of the subspace polynomials s_i selected by
the binary digits of t, so X_t has degree t and the first 2^k elements span
exactly the polynomials of degree below 2^k.  Conversion of a length-2^m
coefficient vector splits off the largest power-of-two block k = binrd(m-1),
rewrites the input in radix y = s_k(x) = x^(2^k) + x, converts the outer
vector of y-coefficients, then converts each y-coefficient in place.

Everything here operates on bit-packed vectors: one int, W bits per
coefficient slot, slot i at bits [i*W, (i+1)*W).  GF(2) polynomials use
W = 1; vectors over an extension field pack each coordinate int into a wider
slot, and since slot addition is XOR in both cases the same routine serves
both.  The radix rewrite is a fold: dividing by y^A = x^(2H) + x^A (H and A
in slots, A = H / 2^k <= H / 2) moves the top half down by H - A slots at
most twice before the remainder settles, and because the fold is oblivious
to the data it runs on every block of the packed vector simultaneously
under a periodic mask.  No per-block Python loop survives.

to_novel_by_division is the straightforward quadratic rewrite (long
division by the full s_k) retained as an independent cross-check.
"""

from __future__ import annotations

from functools import lru_cache

from .subspace import subspace_coeffs

__all__ = [
    "to_novel",
    "from_novel",
    "to_novel_packed",
    "from_novel_packed",
    "to_novel_by_division",
    "ConvTally",
]


class ConvTally:
    """Rough word-operation counter for scaling assertions."""

    __slots__ = ("words",)

    def __init__(self):
        self.words = 0


@lru_cache(maxsize=256)
def _half_mask(total: int, seg: int) -> int:
    """Mask selecting the low half of every seg-bit segment of a total-bit int."""
    p = (1 << (seg >> 1)) - 1
    span = seg
    while span < total:
        p |= p << span
        span <<= 1
    return p


def _radix_fwd(f: int, total: int, m: int, k: int, w: int, tally) -> int:
    """Rewrite every 2^m-slot block of f in radix y = x^(2^k) + x.

    Level mu splits each 2^mu-slot segment as q * y^A + r with A = 2^(mu-1-k)
    and stores [r | q]; two unconditional fold rounds suffice since A <= H/2.
    """
    for mu in range(m, k, -1):
        seg = (w << mu)
        hb = seg >> 1
        ab = w << (mu - 1 - k)
        low = _half_mask(total, seg)
        t = (f >> hb) & low
        q = t
        r = (f & low) ^ (t << ab)
        t = (r >> hb) & low
        q ^= t
        r = (r & low) ^ (t << ab)
        f = r | (q << hb)
        if tally is not None:
            tally.words += 8 * ((total >> 6) + 1)
    return f


def _radix_inv(f: int, total: int, m: int, k: int, w: int, tally) -> int:
    """Undo _radix_fwd: rebuild q * (x^(2H) + x^A) + r level by level."""
    for mu in range(k + 1, m + 1):
        seg = (w << mu)
        hb = seg >> 1
        ab = w << (mu - 1 - k)
        low = _half_mask(total, seg)
        q = (f >> hb) & low
        f = (f & low) ^ (q << ab) ^ (q << hb)
        if tally is not None:
            tally.words += 5 * ((total >> 6) + 1)
    return f


def to_novel(f: int, n: int, tally: ConvTally | None = None) -> int:
    """Convert a GF(2)[x] coefficient vector (bit i = coeff of x^i) of
    length n to the subspace-product basis."""
    m = _check_packed(f, n, 1)
    return _convert(f, n, m, 1, tally, forward=True)


def from_novel(g: int, n: int, tally: ConvTally | None = None) -> int:
    """Inverse of to_novel."""
    m = _check_packed(g, n, 1)
    return _convert(g, n, m, 1, tally, forward=False)


def to_novel_packed(f: int, n: int, w: int, tally: ConvTally | None = None) -> int:
    """to_novel for a vector of n field coordinates packed w bits per slot."""
    m = _check_packed(f, n, w)
    return _convert(f, n * w, m, w, tally, forward=True)


def from_novel_packed(g: int, n: int, w: int, tally: ConvTally | None = None) -> int:
    """Inverse of to_novel_packed."""
    m = _check_packed(g, n, w)
    return _convert(g, n * w, m, w, tally, forward=False)


def _check_packed(f: int, n: int, w: int) -> int:
    if n < 1 or n & (n - 1):
        raise ValueError(f"vector length {n} is not a power of two")
    if f < 0 or f.bit_length() > n * w:
        raise ValueError("coefficient vector overflows the stated length")
    return (n - 1).bit_length()


def _convert(f: int, total: int, m: int, w: int, tally, forward: bool) -> int:
    """Apply the conversion to every 2^m-slot block of the total-bit int f.

    The outer/inner recursions act on disjoint slot ranges, so the order only
    matters relative to the radix rewrite: forward rewrites first, the
    inverse unwinds it last.
    """
    if m <= 1:
        return f
    k = 1 << ((m - 1).bit_length() - 1)
    if forward:
        f = _radix_fwd(f, total, m, k, w, tally)
        f = _convert(f, total, m - k, w << k, tally, True)
        f = _convert(f, total, k, w, tally, True)
        return f
    f = _convert(f, total, k, w, tally, False)
    f = _convert(f, total, m - k, w << k, tally, False)
    return _radix_inv(f, total, m, k, w, tally)


def to_novel_by_division(f: int, n: int) -> int:
    """Quadratic reference conversion by long division with the full s_k."""
    _check_packed(f, n, 1)

    def rec(g: int, length: int) -> int:
        if length <= 2:
            return g
        half = length >> 1
        k = half.bit_length() - 1
        s = 0
        bits = subspace_coeffs(k).bits
        i = 0
        while bits:
            if bits & 1:
                s |= 1 << (1 << i)
            bits >>= 1
            i += 1
        degs = 1 << k
        q = 0
        r = g
        while r.bit_length() > degs:
            sh = r.bit_length() - 1 - degs
            q |= 1 << sh
            r ^= s << sh
        return rec(r, half) | (rec(q, half) << half)

    return rec(f, n)
