"""Bit-packed linear algebra over GF(2).

A matrix row is an int whose bit c is the entry in column c.  Rank, reduced
echelon form, null spaces, and span membership all work on lists of such ints.
The minimum-weight routine enumerates a full row space: a pure-int Gray-code
walk up to 2^16 words, and a numpy meet-in-the-middle sweep (prefix Gray walk
over a precomputed suffix table) beyond that.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np


def parity_dot(a: int, b: int) -> int:
    """Inner product of two rows over GF(2)."""
    return (a & b).bit_count() & 1


def rank(rows: list[int]) -> int:
    """Rank of the row set."""
    basis: list[int] = []
    r = 0
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
            r += 1
    return r


def rref(rows: list[int]) -> list[tuple[int, int]]:
    """Reduced echelon form as (pivot_column, row) pairs, highest pivot first."""
    pivots: list[tuple[int, int]] = []
    for v in rows:
        for c, b in pivots:
            if (v >> c) & 1:
                v ^= b
        if v == 0:
            continue
        c = v.bit_length() - 1
        pivots = [(pc, pr ^ v if (pr >> c) & 1 else pr) for pc, pr in pivots]
        pivots.append((c, v))
        pivots.sort(reverse=True)
    return pivots


def in_span(pivots: list[tuple[int, int]], word: int) -> bool:
    """Whether word lies in the row space described by rref output."""
    for c, b in pivots:
        if (word >> c) & 1:
            word ^= b
    return word == 0


def nullspace(rows: list[int], ncols: int) -> list[int]:
    """Basis of {v : parity_dot(r, v) == 0 for every row r}."""
    pivots = rref(rows)
    pivot_cols = {c for c, _ in pivots}
    out: list[int] = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = 1 << free
        for c, b in pivots:
            if (b >> free) & 1:
                v |= 1 << c
        out.append(v)
    for v in out:
        for r in rows:
            if parity_dot(r, v):
                raise AssertionError("nullspace vector fails orthogonality")
    return out


def column_kernel(cols: list[int]) -> list[int]:
    """Basis of dependencies among columns: masks k with XOR of cols[i] over set bits == 0."""
    lead: dict[int, tuple[int, int]] = {}  # leading bit -> (reduced column, combination)
    kernel: list[int] = []
    for i, col in enumerate(cols):
        v, mask = col, 1 << i
        while v:
            hit = lead.get(v.bit_length())
            if hit is None:
                lead[v.bit_length()] = (v, mask)
                break
            v ^= hit[0]
            mask ^= hit[1]
        else:
            kernel.append(mask)
    return kernel


# ---------------------------------------------------------------------------
# minimum nonzero weight of a row space
# ---------------------------------------------------------------------------

_SPLIT = 16  # suffix half processed as a numpy table

if hasattr(np, "bitwise_count"):

    def _popcounts(arr: np.ndarray) -> np.ndarray:
        return np.bitwise_count(arr).astype(np.uint32)

else:
    _LUT16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)

    def _popcounts(arr: np.ndarray) -> np.ndarray:
        return _LUT16[arr.view(np.uint16)].astype(np.uint32)


def _min_weight_int(rows: list[int]) -> int:
    """Gray-code walk over all 2^k combinations with plain ints."""
    best = min(r.bit_count() for r in rows)
    cur = 0
    for i in range(1, 1 << len(rows)):
        cur ^= rows[(i & -i).bit_length() - 1]
        w = cur.bit_count()
        if w < best:
            best = w
            if best == 1:
                break
    return best


def _to_lanes(word: int, lanes: int) -> list[int]:
    return [(word >> (64 * lane)) & 0xFFFFFFFFFFFFFFFF for lane in range(lanes)]


def _min_weight_numpy(rows: list[int], nbits: int) -> int:
    """Prefix Gray walk against a table of all suffix combinations."""
    k = len(rows)
    k_suf = min(k, _SPLIT)
    suffix, prefix = rows[:k_suf], rows[k_suf:]
    lanes = (nbits + 63) // 64

    tab_int = [0] * (1 << k_suf)
    for i in range(1, 1 << k_suf):
        tab_int[i] = tab_int[i ^ (i & -i)] ^ suffix[(i & -i).bit_length() - 1]
    tab = np.empty((1 << k_suf, lanes), dtype=np.uint64)
    for lane in range(lanes):
        shift, m64 = 64 * lane, 0xFFFFFFFFFFFFFFFF
        tab[:, lane] = np.fromiter(
            ((w >> shift) & m64 for w in tab_int), dtype=np.uint64, count=len(tab_int)
        )

    best = int(_popcounts(tab[1:]).sum(axis=1).min())
    cur = 0
    for i in range(1, 1 << len(prefix)):
        cur ^= prefix[(i & -i).bit_length() - 1]
        cur_lanes = np.fromiter(_to_lanes(cur, lanes), dtype=np.uint64, count=lanes)
        weights = _popcounts(tab ^ cur_lanes).sum(axis=1, dtype=np.uint32)
        w = int(weights.min())
        if w < best:
            best = w
            if best == 1:
                break
    return best


def min_weight_span(rows: list[int], nbits: int) -> int:
    """Minimum Hamming weight over all nonzero words spanned by rows."""
    basis = [row for _, row in rref(list(rows))]
    if not basis:
        raise ValueError("empty span has no nonzero word")
    if len(basis) <= _SPLIT:
        return _min_weight_int(basis)
    return _min_weight_numpy(basis, nbits)


def min_weight_span_reference(rows: list[int]) -> int:
    """Slow itertools cross-check of min_weight_span, for tests."""
    best = None
    for size in range(1, len(rows) + 1):
        for combo in combinations(rows, size):
            w = 0
            for r in combo:
                w ^= r
            wt = w.bit_count()
            if wt and (best is None or wt < best):
                best = wt
    if best is None:
        raise ValueError("empty span has no nonzero word")
    return best
