"""Euclidean duals of the chain codes.

The dual of C_j is spanned by the first m*j shifts of one word h*, built from
x^e + 1 and the coefficient-reversed cofactor of P; construction always
verifies full rank and orthogonality against the generator matrix.  Duals are
"sequential" codes: shifting a dual word right by one position stays in the
dual after an appropriate bit enters at the top.  On two families of indices
(j a power of two, and j of the form 2^T - 2^(T-r)) the dual distance is the
minimum over a small explicit candidate set, computed here by enumeration;
everything else falls back to the brute-force oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ._linalg import in_span, min_weight_span, parity_dot, rank, rref
from .codes import PolycyclicCode, code, default_cap, generator_rows
from .errors import CapExceeded, InternalConsistencyError, ValidationError, WrongRegime
from .gf2poly import mul, mul_trunc, power_trunc, substitute_power
from .ring import RingContext

DEFAULT_CANDIDATE_CAP = 1 << 20


@dataclass(frozen=True)
class DualCode:
    """The dual of C_j, spanned by shifts of h_star; rank-checked at build time."""

    ctx: RingContext
    j: int
    h_star: int
    rows: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def dim(self) -> int:
        return self.ctx.m * self.j


def dual_code(c: PolycyclicCode) -> DualCode:
    """Construct the dual of C_j (1 <= j <= L-1) and verify it is one."""
    ctx, j = c.ctx, c.j
    if not 1 <= j <= ctx.L - 1:
        raise ValidationError("dual construction covers 1 <= j <= L - 1")
    n = ctx.n
    mask = (1 << n) - 1
    h = mul_trunc(
        power_trunc(ctx.x_e_1, (1 << ctx.T) - j, n),
        power_trunc(ctx.U_star, j, n),
        n,
    )
    rows = tuple((h << i) & mask for i in range(ctx.m * j))
    if rank(list(rows)) != ctx.m * j:
        raise InternalConsistencyError("dual spanning rows are not independent")
    for g in generator_rows(c):
        for hrow in rows:
            if parity_dot(g, hrow):
                raise InternalConsistencyError("dual spanning row not orthogonal to the code")
    return DualCode(ctx, j, h, rows)


def dual_min_distance_bruteforce(dual: DualCode, cap: int | None = None) -> int:
    """Exact dual distance by enumerating the dual code."""
    cap = default_cap() if cap is None else cap
    if dual.dim > cap:
        raise CapExceeded(
            f"dual oracle needs 2^{dual.dim} words, over the cap of 2^{cap}; raise the cap"
        )
    return min_weight_span(list(dual.rows), dual.n)


def sequential_closure_check(dual: DualCode, samples: int = 0, seed: int = 0) -> bool:
    """Whether each checked dual word, shifted right, stays in the dual for some top bit."""
    pivots = rref(list(dual.rows))
    top = 1 << (dual.n - 1)

    def shifted_stays(w: int) -> bool:
        w1 = w >> 1
        return in_span(pivots, w1) or in_span(pivots, w1 | top)

    words = list(dual.rows)
    if samples:
        rng = random.Random(seed)
        for _ in range(samples):
            combo = rng.getrandbits(dual.dim)
            w = 0
            t = combo
            while t:
                w ^= dual.rows[(t & -t).bit_length() - 1]
                t &= t - 1
            words.append(w)
    return all(shifted_stays(w) for w in words)


# ---------------------------------------------------------------------------
# dual distances on the two anchored families
# ---------------------------------------------------------------------------


def _spread_candidates(ctx: RingContext, base: int, lead_deg: int, factor: int, candidate_cap: int):
    """Yield (ell, candidate) for ell = x^lead_deg + lower terms, candidate =
    (ell * base)(x^factor) * x^(factor - 1) reduced mod x^n."""
    count = 1 << lead_deg
    if count > candidate_cap:
        raise CapExceeded(
            f"dual reduced set has 2^{lead_deg} candidates, over the cap of {candidate_cap}"
        )
    n = ctx.n
    mask = (1 << n) - 1
    tbits = -(-n // factor)  # only these low coefficients survive the spread
    base_t = base & ((1 << tbits) - 1)
    tmask = (1 << tbits) - 1
    for low in range(count):
        ell = (1 << lead_deg) | low
        w = mul(ell, base_t) & tmask
        cand = (substitute_power(w, factor) << (factor - 1)) & mask
        yield ell, cand


def dual_pow2_candidates(ctx: RingContext, s: int, candidate_cap: int | None = None) -> dict[int, int]:
    """Candidate weights for the dual distance at j = 2^(T-s): {ell mask: weight}."""
    if not 1 <= s <= ctx.T:
        raise ValidationError("dual anchor parameter s must satisfy 1 <= s <= T")
    cap = DEFAULT_CANDIDATE_CAP if candidate_cap is None else candidate_cap
    factor = 1 << (ctx.T - s)
    tbits = -(-ctx.n // factor)
    base = mul_trunc(
        power_trunc(ctx.x_e_1, (1 << s) - 1, tbits),
        ctx.U_star,
        tbits,
    )
    out: dict[int, int] = {}
    for ell, cand in _spread_candidates(ctx, base, ctx.m - 1, factor, cap):
        out[ell] = cand.bit_count()
    return out


def dual_pow2_distance(ctx: RingContext, s: int, candidate_cap: int | None = None) -> int:
    """Exact dual distance at j = 2^(T-s) as the minimum over the candidate set."""
    weights = [w for w in dual_pow2_candidates(ctx, s, candidate_cap).values() if w]
    if not weights:
        raise InternalConsistencyError("every dual candidate reduced to zero")
    return min(weights)


def dual_complement_distance(ctx: RingContext, r: int, candidate_cap: int | None = None) -> int:
    """Exact dual distance at j = 2^T - 2^(T-r) (L at the window top or in its upper part)."""
    if ctx.regime == "pow2":
        rmax = ctx.T
    elif ctx.regime == "high":
        rmax = ctx.R  # type: ignore[assignment]
    else:
        raise WrongRegime("dual complement anchors need L == 2^T or L above 3*2^(T-2)")
    if not 1 <= r <= rmax:
        raise ValidationError(f"dual anchor parameter r must satisfy 1 <= r <= {rmax}")
    cap = DEFAULT_CANDIDATE_CAP if candidate_cap is None else candidate_cap
    factor = 1 << (ctx.T - r)
    tbits = -(-ctx.n // factor)
    base = mul_trunc(
        ctx.x_e_1 & ((1 << tbits) - 1),
        power_trunc(ctx.U_star, (1 << r) - 1, tbits),
        tbits,
    )
    lead_deg = ctx.m * ((1 << r) - 1) - 1
    best: int | None = None
    for _, cand in _spread_candidates(ctx, base, lead_deg, factor, cap):
        if cand == 0:
            continue
        w = cand.bit_count()
        if best is None or w < best:
            best = w
    if best is None:
        raise InternalConsistencyError("every dual candidate reduced to zero")
    return best


def dual_distance_with_provenance(
    ctx: RingContext,
    j: int,
    oracle_cap: int | None = None,
    candidate_cap: int | None = None,
) -> tuple[int | None, list[str]]:
    """Best effort at the dual distance of C_j: anchored families, then the oracle."""
    if not 1 <= j <= ctx.L - 1:
        raise ValidationError("dual distance covers 1 <= j <= L - 1")
    ocap = default_cap() if oracle_cap is None else oracle_cap
    d: int | None = None
    provenance: list[str] = []

    if j & (j - 1) == 0:
        try:
            d = dual_pow2_distance(ctx, ctx.T - j.bit_length() + 1, candidate_cap)
            provenance.append("dual-reduced-set")
        except CapExceeded:
            pass
    else:
        diff = (1 << ctx.T) - j
        if diff & (diff - 1) == 0 and ctx.regime in ("pow2", "high"):
            r = ctx.T - diff.bit_length() + 1
            rmax = ctx.T if ctx.regime == "pow2" else ctx.R
            if 1 <= r <= rmax:  # type: ignore[operator]
                try:
                    d = dual_complement_distance(ctx, r, candidate_cap)
                    provenance.append("dual-reduced-set")
                except CapExceeded:
                    pass

    if ctx.m * j <= ocap:
        oracle_d = dual_min_distance_bruteforce(dual_code(code(ctx, j)), cap=ocap)
        if d is not None and oracle_d != d:
            raise InternalConsistencyError(
                f"dual distance at j={j}: reduced set says {d}, oracle says {oracle_d}"
            )
        d = oracle_d
        provenance.append("dual-oracle")
    return d, provenance


def dual_summary(
    ctx: RingContext, j: int, oracle_cap: int | None = None, samples: int = 0, seed: int = 0
) -> dict:
    """JSON-ready dual summary for C_j."""
    dual = dual_code(code(ctx, j))
    d, provenance = dual_distance_with_provenance(ctx, j, oracle_cap=oracle_cap)
    if sequential_closure_check(dual, samples=samples, seed=seed):
        provenance.append("sequential-closure")
    return {
        "j": j,
        "n": dual.n,
        "k_dual": dual.dim,
        "d_dual": d,
        "provenance": provenance,
    }
