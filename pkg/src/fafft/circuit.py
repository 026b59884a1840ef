"""Straight-line AND/XOR circuits for GF(2)[x] multiplication.

The multiplication pipeline is GF(2)-linear everywhere except the lane
products, so a circuit falls out of running the pipeline symbolically: basis
conversion and butterfly stages become XOR networks, and each cross-section
lane gets one tower Karatsuba multiplier (all of the circuit's AND gates,
3^lg(w) for a width-w lane).

Wires are ints: 0 is the constant zero, 1..n the bits of operand a,
n+1..2n the bits of b, then one ref per emitted gate.  The builder folds
away trivial gates (x^x, x^0, x&x, x&0) and dedups identical gate pairs.
Constant multiplications (twiddles, the zeta step inside Karatsuba) pass
through a per-matrix template cache; with cse enabled the template rows are
first reduced by greedy pair extraction (repeatedly materialize the XOR pair
shared by the most rows).  A final dead-code sweep drops everything the
product bits never read, including the inverse-stage work for coefficient
slots above 2n-2.

The text form ("SLP") lists gates in dependency order followed by the output
bindings; verify_slp replays it bitsliced (one big int per wire, one trial
per bit) against the quadratic convolution.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .field import CantorField, binru
from .transform import FaftEngine

__all__ = [
    "Circuit",
    "VerifyReport",
    "gen_mul_circuit",
    "parse_slp",
    "eval_slp",
    "verify_slp",
]

ZERO = 0


@dataclass
class Circuit:
    n: int
    gates: list[tuple[str, int, int]]  # ref of gates[i] is 2n + 1 + i
    outputs: list[int]  # 2n-1 wire refs, one per product bit

    @property
    def and_count(self) -> int:
        return sum(1 for g in self.gates if g[0] == "AND")

    @property
    def xor_count(self) -> int:
        return sum(1 for g in self.gates if g[0] == "XOR")

    def to_slp(self) -> str:
        n = self.n
        names = {ZERO: "ZERO"}
        for i in range(n):
            names[1 + i] = f"a{i}"
            names[n + 1 + i] = f"b{i}"
        lines = [f"SLP n={n} and={self.and_count} xor={self.xor_count}"]
        for i, (op, x, y) in enumerate(self.gates):
            names[2 * n + 1 + i] = f"t{i}"
            lines.append(f"t{i} = {op} {names[x]} {names[y]}")
        for i, ref in enumerate(self.outputs):
            lines.append(f"c{i} = {names[ref]}")
        return "\n".join(lines) + "\n"


class _Builder:
    def __init__(self, n: int):
        self.n = n
        self.gates: list[tuple[str, int, int]] = []
        self._memo: dict[tuple[str, int, int], int] = {}

    def _emit(self, op: str, x: int, y: int) -> int:
        if x > y:
            x, y = y, x
        key = (op, x, y)
        ref = self._memo.get(key)
        if ref is None:
            self.gates.append((op, x, y))
            ref = 2 * self.n + len(self.gates)
            self._memo[key] = ref
        return ref

    def xor(self, x: int, y: int) -> int:
        if x == ZERO:
            return y
        if y == ZERO:
            return x
        if x == y:
            return ZERO
        return self._emit("XOR", x, y)

    def and_(self, x: int, y: int) -> int:
        if x == ZERO or y == ZERO:
            return ZERO
        if x == y:
            return x
        return self._emit("AND", x, y)

    def xor_vec(self, a: list[int], b: list[int]) -> list[int]:
        assert len(a) == len(b)
        return [self.xor(x, y) for x, y in zip(a, b)]


def _pad(refs: list[int], w: int) -> list[int]:
    return refs + [ZERO] * (w - len(refs))


# ----- constant-matrix templates ----------------------------------------


def _paar_reduce(rows: tuple[int, ...], w_in: int):
    """Greedy pair extraction over XOR rows (masks over w_in columns).

    Returns (steps, outs): steps materialize new columns as XORs of earlier
    column pairs, outs lists the column indices each output row XORs.
    """
    occ = [0] * w_in
    for r, row in enumerate(rows):
        for c in range(w_in):
            if (row >> c) & 1:
                occ[c] |= 1 << r
    rows_l = list(rows)
    steps: list[tuple[int, int]] = []
    while True:
        best_score = 1
        best = None
        ncols = len(occ)
        for i in range(ncols):
            if occ[i] == 0:
                continue
            for j in range(i + 1, ncols):
                s = (occ[i] & occ[j]).bit_count()
                if s > best_score:
                    best_score = s
                    best = (i, j)
        if best is None:
            break
        i, j = best
        shared = occ[i] & occ[j]
        new = len(occ)
        steps.append((i, j))
        occ[i] &= ~shared
        occ[j] &= ~shared
        occ.append(shared)
        pair = (1 << i) | (1 << j)
        rr = shared
        while rr:
            low = rr & -rr
            r = low.bit_length() - 1
            rows_l[r] = (rows_l[r] & ~pair) | (1 << new)
            rr ^= low
    outs = []
    for row in rows_l:
        cols = []
        while row:
            low = row & -row
            cols.append(low.bit_length() - 1)
            row ^= low
        outs.append(tuple(cols))
    return steps, tuple(outs)


class _MatrixCache:
    """Emit out = M * x for constant GF(2) matrices, with template reuse."""

    def __init__(self, bld: _Builder, cse: bool):
        self.bld = bld
        self.cse = cse
        self._templates: dict[tuple[int, tuple[int, ...]], tuple] = {}

    def apply(self, rows: tuple[int, ...], w_in: int, x: list[int]) -> list[int]:
        key = (w_in, rows)
        tpl = self._templates.get(key)
        if tpl is None:
            if self.cse:
                tpl = _paar_reduce(rows, w_in)
            else:
                outs = []
                for row in rows:
                    cols = [c for c in range(w_in) if (row >> c) & 1]
                    outs.append(tuple(cols))
                tpl = ((), tuple(outs))
            self._templates[key] = tpl
        steps, outs = tpl
        vals = list(x)
        for i, j in steps:
            vals.append(self.bld.xor(vals[i], vals[j]))
        out_refs = []
        for cols in outs:
            r = ZERO
            for c in cols:
                r = self.bld.xor(r, vals[c])
            out_refs.append(r)
        return out_refs

    def mul_const(self, c: int, x: list[int], w_in: int, w_out: int, field: CantorField) -> list[int]:
        """c * x as a w_out-bit vector, x given by w_in coordinate wires."""
        rows = []
        cols = [field.mul(c, 1 << j) for j in range(w_in)]
        for i in range(w_out):
            mask = 0
            for j in range(w_in):
                mask |= ((cols[j] >> i) & 1) << j
            rows.append(mask)
        return self.apply(tuple(rows), w_in, x)


# ----- symbolic pipeline stages ------------------------------------------


def _convert_sym(bld: _Builder, slots: list[int], m: int, wu: int, forward: bool) -> list[int]:
    """Basis conversion on wire refs; mirrors the packed-int version with
    units of wu refs."""
    if m <= 1:
        return slots
    k = 1 << ((m - 1).bit_length() - 1)
    if forward:
        slots = _radix_sym(bld, slots, m, k, wu, True)
        slots = _convert_sym(bld, slots, m - k, wu << k, True)
        return _convert_sym(bld, slots, k, wu, True)
    slots = _convert_sym(bld, slots, k, wu, False)
    slots = _convert_sym(bld, slots, m - k, wu << k, False)
    return _radix_sym(bld, slots, m, k, wu, False)


def _radix_sym(bld: _Builder, slots: list[int], m: int, k: int, wu: int, forward: bool) -> list[int]:
    out = list(slots)
    total_u = len(slots) // wu
    levels = range(m, k, -1) if forward else range(k + 1, m + 1)
    for mu in levels:
        seg_u = 1 << mu
        hu = seg_u >> 1
        au = 1 << (mu - 1 - k)
        for s in range(0, total_u, seg_u):

            def unit(u):
                base = (s + u) * wu
                return out[base : base + wu]

            def setu(u, refs):
                base = (s + u) * wu
                out[base : base + wu] = refs

            if forward:
                # divide lo + x^H hi by y^A = x^H + x^A, layout [r | q]
                hi = [unit(hu + v) for v in range(hu)]
                r = [unit(v) for v in range(hu)]
                for v in range(au, hu):
                    r[v] = bld.xor_vec(r[v], hi[v - au])
                t2 = hi[hu - au :]  # spill of hi << A beyond the half mark
                q = list(hi)
                for v in range(au):
                    q[v] = bld.xor_vec(q[v], t2[v])
                    r[au + v] = bld.xor_vec(r[au + v], t2[v])
                for v in range(hu):
                    setu(v, r[v])
                    setu(hu + v, q[v])
            else:
                r = [unit(v) for v in range(hu)]
                q = [unit(hu + v) for v in range(hu)]
                for v in range(au, hu):
                    r[v] = bld.xor_vec(r[v], q[v - au])
                hi = list(q)
                for v in range(au):
                    hi[v] = bld.xor_vec(hi[v], q[hu - au + v])
                for v in range(hu):
                    setu(v, r[v])
                    setu(hu + v, hi[v])
    return out


def _truncated(l: int) -> bool:
    return l > 0 and (l & (l - 1)) == 0


def _trace_forward(bld, mats, eng, m, coeffs: list[int]) -> list[list[int]]:
    """Forward pruned transform on wires; returns lane ref-vectors in leaf
    order."""
    out: list[list[int]] = []
    field = eng.field

    def rec(k, vals, l, alpha):
        if k == 0:
            out.append(vals[0])
            return
        h = 1 << (k - 1)
        tw = eng.twiddles.twiddle(k - 1, alpha)
        w_in = binru(l)
        wc = binru(l + 1) if l else 1
        p0 = vals[:h]
        p1 = vals[h:]
        q0 = []
        for j in range(h):
            y = mats.mul_const(tw, p1[j], w_in, wc, field)
            q0.append(bld.xor_vec(_pad(p0[j], wc), y))
        if _truncated(l):
            rec(k - 1, q0, l + 1, alpha)
            return
        q1 = [bld.xor_vec(q0[j], _pad(p1[j], wc)) for j in range(h)]
        rec(k - 1, q0, 0 if l == 0 else l + 1, alpha)
        rec(k - 1, q1, 1 if l == 0 else l + 1, alpha ^ h)

    rec(m, [[c] for c in coeffs], 0, 0)
    return out


def _trace_inverse(bld, mats, eng, m, lanes: list[list[int]]) -> list[int]:
    """Inverse pruned transform on wires; returns 2^m single-bit coeff refs."""
    field = eng.field
    pos = 0

    def rec(k, l, alpha):
        nonlocal pos
        if k == 0:
            v = lanes[pos]
            pos += 1
            return [v]
        h = 1 << (k - 1)
        tw = eng.twiddles.twiddle(k - 1, alpha)
        w = binru(l)
        if _truncated(l):
            q = rec(k - 1, l + 1, alpha)
            c = tw ^ (1 << l)
            p0 = []
            p1 = []
            for qv in q:
                r0 = qv[:l]
                r1 = qv[l:]
                p0.append(bld.xor_vec(r0, mats.mul_const(c, r1, l, l, field)))
                p1.append(r1)
            return p0 + p1
        q0 = rec(k - 1, 0 if l == 0 else l + 1, alpha)
        q1 = rec(k - 1, 1 if l == 0 else l + 1, alpha ^ h)
        p1 = [bld.xor_vec(a, b) for a, b in zip(q0, q1)]
        p0 = [
            bld.xor_vec(q0[j], mats.mul_const(tw, p1[j], w, w, field))
            for j in range(h)
        ]
        return p0 + p1

    vals = rec(m, 0, 0)
    assert pos == len(lanes)
    return [v[0] for v in vals]


def _lane_mul_sym(bld, mats, field, a: list[int], b: list[int], w: int) -> list[int]:
    """Tower Karatsuba product of two w-wide wire vectors."""
    if w == 1:
        return [bld.and_(a[0], b[0])]
    h = w >> 1
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    m0 = _lane_mul_sym(bld, mats, field, a0, b0, h)
    m1 = _lane_mul_sym(bld, mats, field, a1, b1, h)
    t = _lane_mul_sym(
        bld, mats, field, bld.xor_vec(a0, a1), bld.xor_vec(b0, b1), h
    )
    zeta = 1 << (h - 1)  # v_{h-1} = zeta_{lg h}
    zm1 = mats.mul_const(zeta, m1, h, h, field)
    low = bld.xor_vec(m0, zm1)
    high = bld.xor_vec(t, m0)
    return low + high


def _dead_code_sweep(n: int, gates, outputs):
    first = 2 * n + 1
    live = [False] * len(gates)
    stack = [r for r in outputs if r >= first]
    while stack:
        r = stack.pop()
        i = r - first
        if live[i]:
            continue
        live[i] = True
        for x in gates[i][1:]:
            if x >= first:
                stack.append(x)
    remap = {}
    new_gates = []
    for i, g in enumerate(gates):
        if not live[i]:
            continue
        op, x, y = g
        x = remap.get(x, x)
        y = remap.get(y, y)
        new_gates.append((op, x, y))
        remap[first + i] = first + len(new_gates) - 1
    new_outputs = [remap.get(r, r) for r in outputs]
    return new_gates, new_outputs


_gen_engine: FaftEngine | None = None


def gen_mul_circuit(n: int, cse: bool = True) -> Circuit:
    """Circuit multiplying two n-bit GF(2)[x] polynomials (2n-1 outputs)."""
    global _gen_engine
    if n < 1:
        raise ValueError("operand bit count must be >= 1")
    if _gen_engine is None:
        _gen_engine = FaftEngine(6)
    eng = _gen_engine
    need = 2 * n - 1
    m = (need - 1).bit_length()
    N = 1 << m
    bld = _Builder(n)
    mats = _MatrixCache(bld, cse)

    def transform_side(base: int) -> list[list[int]]:
        refs = [base + i for i in range(n)] + [ZERO] * (N - n)
        novel = _convert_sym(bld, refs, m, 1, True)
        return _trace_forward(bld, mats, eng, m, novel)

    la = transform_side(1)
    lb = transform_side(n + 1)
    widths = [p.orbit for p in eng.cross_section(m)]
    lanes = [
        _lane_mul_sym(bld, mats, eng.field, _pad(a, w), _pad(b, w), w)
        for a, b, w in zip(la, lb, widths)
    ]
    coeffs = _trace_inverse(bld, mats, eng, m, lanes)
    poly = _convert_sym(bld, coeffs, m, 1, False)
    outputs = poly[:need]
    gates, outputs = _dead_code_sweep(n, bld.gates, outputs)
    return Circuit(n, gates, outputs)


# ----- text form, evaluation, verification -------------------------------


def parse_slp(text: str) -> Circuit:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if not head or head[0] != "SLP":
        raise ValueError("missing SLP header")
    fields = dict(kv.split("=", 1) for kv in head[1:])
    n = int(fields["n"])

    def ref(tok: str) -> int:
        if tok == "ZERO":
            return ZERO
        kind, idx = tok[0], int(tok[1:])
        if kind == "a":
            return 1 + idx
        if kind == "b":
            return n + 1 + idx
        if kind == "t":
            return 2 * n + 1 + idx
        raise ValueError(f"bad wire token {tok!r}")

    gates: list[tuple[str, int, int]] = []
    outputs: list[int | None] = [None] * (2 * n - 1)
    for ln in lines[1:]:
        lhs, rhs = ln.split("=", 1)
        lhs = lhs.strip()
        parts = rhs.split()
        if lhs.startswith("t"):
            if int(lhs[1:]) != len(gates):
                raise ValueError(f"gate {lhs} out of order")
            op, x, y = parts
            if op not in ("AND", "XOR"):
                raise ValueError(f"bad op {op!r}")
            xr, yr = ref(x), ref(y)
            if max(xr, yr) > 2 * n + len(gates):
                raise ValueError(f"gate {lhs} reads a later wire")
            gates.append((op, xr, yr))
        elif lhs.startswith("c"):
            outputs[int(lhs[1:])] = ref(parts[0])
        else:
            raise ValueError(f"bad line {ln!r}")
    if any(o is None for o in outputs):
        raise ValueError("missing output bindings")
    circ = Circuit(n, gates, outputs)  # type: ignore[arg-type]
    counts = (circ.and_count, circ.xor_count)
    declared = (int(fields["and"]), int(fields["xor"]))
    if counts != declared:
        raise ValueError(f"header counts {declared} != actual {counts}")
    return circ


def eval_slp(circ: Circuit, a_bits: list[int], b_bits: list[int]) -> list[int]:
    """Replay the circuit bitsliced: each wire is an int, one trial per bit."""
    n = circ.n
    wires = [0] + a_bits + b_bits
    for op, x, y in circ.gates:
        wires.append((wires[x] & wires[y]) if op == "AND" else (wires[x] ^ wires[y]))
    return [wires[r] for r in circ.outputs]


@dataclass
class VerifyReport:
    n: int
    lanes: int
    exhaustive: bool
    failures: list[tuple[int, int, int, int, int]] = dc_field(default_factory=list)
    # entries: (a, b, coeff index, got bit, want bit)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_slp(
    circ: Circuit | str,
    trials: int = 10_000,
    seed: int = 0,
    exhaustive_limit: int = 1 << 16,
) -> VerifyReport:
    """Compare the circuit against the quadratic convolution on bitsliced
    batches: every (a, b) pair when 2^(2n) fits the limit, otherwise edge
    patterns plus random trials."""
    if isinstance(circ, str):
        circ = parse_slp(circ)
    n = circ.n
    if 1 << (2 * n) <= exhaustive_limit:
        pairs = [(t >> n, t & ((1 << n) - 1)) for t in range(1 << (2 * n))]
        exhaustive = True
    else:
        rng = random.Random(seed)
        ones = (1 << n) - 1
        pairs = [(0, 0), (ones, ones), (ones, 0), (0, ones), (1, 1)]
        for i in range(n):
            pairs.append((1 << i, 1 << (n - 1 - i)))
        pairs.extend(
            (rng.getrandbits(n), rng.getrandbits(n)) for _ in range(trials)
        )
        exhaustive = False
    lanes = len(pairs)
    a_bits = [0] * n
    b_bits = [0] * n
    for t, (a, b) in enumerate(pairs):
        for i in range(n):
            a_bits[i] |= ((a >> i) & 1) << t
            b_bits[i] |= ((b >> i) & 1) << t
    got = eval_slp(circ, a_bits, b_bits)
    # bitsliced quadratic convolution
    want = [0] * (2 * n - 1)
    for i in range(n):
        ai = a_bits[i]
        if ai == 0:
            continue
        for j in range(n):
            want[i + j] ^= ai & b_bits[j]
    report = VerifyReport(n, lanes, exhaustive)
    for k in range(2 * n - 1):
        diff = got[k] ^ want[k]
        while diff and len(report.failures) < 8:
            t = (diff & -diff).bit_length() - 1
            a, b = pairs[t]
            report.failures.append((a, b, k, (got[k] >> t) & 1, (want[k] >> t) & 1))
            diff &= diff - 1
    return report
