"""Batched depth-by-depth execution of the pruned transform.

transform.py walks the recursion node by node and is the correctness
reference.  This module replays exactly the same butterfly schedule, but one
tree depth at a time: every surviving segment at depth j has the same length
2^(m-j), so one reshape turns the flat state vector into a (segments, length)
matrix and each depth is a handful of whole-array operations.  Surviving
children are selected by a keep mask over the interleaved (Q0, Q1) rows,
which preserves the depth-first leaf order of the reference.

Twiddle products use the coordinate expansion tw * x = XOR of tw * v_j over
the set bits j of x.  The twiddles are fixed per plan, so the per-segment
columns tw * v_j are materialised once at plan build (chained by generator
products along the subset lattice: v_j = v_{j'} * u_t where j' clears the
lowest bit t of j) and all-zero columns are dropped.  A fold at run time is
then one masked XOR per stored column.  Values at recursion state l occupy
binru(l) coordinate bits, which caps the fold width per depth.

Everything here assumes the GF(2)-input setting: state vectors are uint64
lanes holding one field element each, and a plan built once per m is reused
across calls.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import _mul_by_u, _mul_vec, binru
from .transform import FaftEngine, n_cross_section

__all__ = ["LayeredEngine"]

_U = np.uint64


@dataclass
class _Layer:
    length: int  # segment length entering this depth
    count: int  # segments at this depth
    branch: np.ndarray  # bool (count,): True where both children survive
    keep: np.ndarray  # bool (2*count,): interleaved child survival
    tw_cols: list[tuple[int, np.ndarray]]  # (j, tws * v_j as (count, 1))
    c_cols: list[tuple[int, np.ndarray]]  # same for truncated-row constants
    lshift: np.ndarray  # uint64 (count,): state l on truncated rows, 0 elsewhere
    lmask: np.ndarray  # uint64 (count,): 2^l - 1 on truncated rows, 0 elsewhere


@dataclass
class _Plan:
    m: int
    layers: list[_Layer]
    leaf_widths: np.ndarray  # orbit width per leaf, in leaf order
    width_groups: list[tuple[int, np.ndarray]]  # (width, leaf indices)


def _expand_cols(base: np.ndarray, w: int) -> list[tuple[int, np.ndarray]]:
    """Columns base * v_j for j < w, keeping only the nonzero ones."""
    cols = [base]
    for j in range(1, w):
        t = (j & -j).bit_length() - 1
        cols.append(_mul_by_u(cols[j & (j - 1)], t))
    return [(j, c[:, None].copy()) for j, c in enumerate(cols) if c.any()]


def _fold_mul(cols: list[tuple[int, np.ndarray]], x: np.ndarray) -> np.ndarray:
    """Per-row scalar product base[i] * x[i, :] from precomputed columns."""
    y = np.zeros_like(x)
    for j, col in cols:
        y ^= col & (_U(0) - ((x >> _U(j)) & _U(1)))
    return y


class LayeredEngine:
    """Array-batched pruned transform sharing a FaftEngine's field tables."""

    def __init__(self, eng: FaftEngine):
        self.eng = eng
        self._plans: dict[int, _Plan] = {}

    def plan(self, m: int) -> _Plan:
        if m not in self._plans:
            self._plans[m] = self._build_plan(m)
        return self._plans[m]

    def _build_plan(self, m: int) -> _Plan:
        if not 0 <= m <= self.eng.field.d:
            raise ValueError(f"m={m} outside 0..{self.eng.field.d}")
        rows_np = self.eng.twiddles.rows_np()
        alphas = np.zeros(1, dtype=_U)
        ls = np.zeros(1, dtype=np.int64)
        layers: list[_Layer] = []
        for depth in range(m):
            k = m - depth
            count = len(alphas)
            row = rows_np[k - 1]
            tws = np.zeros(count, dtype=_U)
            for b in range(m):
                tws ^= row[b] * ((alphas >> _U(b)) & _U(1))
            trunc = (ls > 0) & ((ls & (ls - 1)) == 0)
            branch = ~trunc
            keep = np.empty(2 * count, dtype=bool)
            keep[0::2] = True
            keep[1::2] = branch
            lu = ls.astype(_U)
            w_fold = binru(int(ls.max()))
            c_arr = np.where(trunc, tws ^ (_U(1) << lu), _U(0))
            layers.append(
                _Layer(
                    length=1 << k,
                    count=count,
                    branch=branch,
                    keep=keep,
                    tw_cols=_expand_cols(tws, w_fold),
                    c_cols=_expand_cols(c_arr, w_fold),
                    lshift=np.where(trunc, lu, _U(0)),
                    lmask=np.where(trunc, (_U(1) << lu) - _U(1), _U(0)),
                )
            )
            l0 = np.where(ls == 0, 0, ls + 1)
            l1 = np.where(ls == 0, 1, ls + 1)
            a1 = alphas ^ _U(1 << (k - 1))
            next_ls = np.empty(2 * count, dtype=np.int64)
            next_ls[0::2] = l0
            next_ls[1::2] = l1
            next_alphas = np.empty(2 * count, dtype=_U)
            next_alphas[0::2] = alphas
            next_alphas[1::2] = a1
            alphas = next_alphas[keep]
            ls = next_ls[keep]
        assert len(alphas) == n_cross_section(m)
        widths = np.ones(len(ls), dtype=np.int64)
        for t in range(1, 7):
            widths[ls > (1 << (t - 1))] = 1 << t
        groups = [
            (w, np.nonzero(widths == w)[0]) for w in sorted(set(widths.tolist()))
        ]
        return _Plan(m, layers, widths, groups)

    # ----- transforms on novel-basis GF(2) coefficient vectors ----------

    def forward(self, coeffs: np.ndarray, m: int) -> np.ndarray:
        """Leaf values (uint64, depth-first order) from 2^m GF(2) coeffs."""
        p = self.plan(m)
        data = coeffs
        for layer in p.layers:
            h = layer.length >> 1
            view = data.reshape(layer.count, layer.length)
            p0 = view[:, :h]
            p1 = view[:, h:]
            q0 = p0 ^ _fold_mul(layer.tw_cols, p1)
            rows = np.empty((2 * layer.count, h), dtype=_U)
            rows[0::2] = q0
            rows[1::2] = q0 ^ p1
            data = rows[layer.keep].reshape(-1)
        return data

    def inverse(self, leaves: np.ndarray, m: int) -> np.ndarray:
        """Novel-basis coefficients back from depth-first leaf values."""
        p = self.plan(m)
        if len(leaves) != n_cross_section(m):
            raise ValueError(
                f"expected {n_cross_section(m)} leaves for m={m}, got {len(leaves)}"
            )
        data = leaves.astype(_U, copy=False)
        for layer in reversed(p.layers):
            h = layer.length >> 1
            rows = np.zeros((2 * layer.count, h), dtype=_U)
            rows[layer.keep] = data.reshape(-1, h)
            q0 = rows[0::2]
            q1 = rows[1::2]
            p1b = q0 ^ q1
            p0b = q0 ^ _fold_mul(layer.tw_cols, p1b)
            r1 = q0 >> layer.lshift[:, None]
            r0 = q0 & layer.lmask[:, None]
            p0t = r0 ^ _fold_mul(layer.c_cols, r1)
            bc = layer.branch[:, None]
            p0 = np.where(bc, p0b, p0t)
            p1 = np.where(bc, p1b, r1)
            data = np.concatenate([p0, p1], axis=1).reshape(-1)
        return data

    def pointwise(self, a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
        """Lane-by-lane field product of two leaf vectors."""
        p = self.plan(m)
        out = np.empty_like(a)
        for w, idx in p.width_groups:
            out[idx] = _mul_vec(a[idx], b[idx], w)
        return out

    # ----- packing helpers ----------------------------------------------

    @staticmethod
    def bits_to_lanes(f: int, n: int) -> np.ndarray:
        """Unpack an n-bit GF(2) coefficient int into uint64 lanes."""
        raw = np.frombuffer(f.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
        return np.unpackbits(raw, count=n, bitorder="little").astype(_U)

    @staticmethod
    def lanes_to_bits(lanes: np.ndarray) -> int:
        """Pack 0/1 uint64 lanes back into a coefficient int."""
        if lanes.size and int(lanes.max()) > 1:
            raise ValueError("lanes hold values outside GF(2)")
        return int.from_bytes(
            np.packbits(lanes.astype(np.uint8), bitorder="little").tobytes(), "little"
        )
