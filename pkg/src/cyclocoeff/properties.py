"""Structural analysis of coefficient sequences.

Convexity is judged on the coefficient set with 0 adjoined (a polynomial is
a power series with zeros past its degree); strong convexity on the bare set.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .arith import Factorization, odd_primes_between
from .kaplan import coeff_range, make_kaplan_context
from .polys import CoeffVector


@dataclass(frozen=True)
class CoeffSummary:
    min: int
    max: int
    present: tuple[int, ...]
    gaps: tuple[int, ...]
    zero_included: bool
    flat: bool
    jump_one: bool
    convex: bool
    strongly_convex: bool

    def as_dict(self) -> dict:
        return {
            "min": self.min,
            "max": self.max,
            "present": list(self.present),
            "gaps": list(self.gaps),
            "zero_included": self.zero_included,
            "flat": self.flat,
            "jump_one": self.jump_one,
            "convex": self.convex,
            "strongly_convex": self.strongly_convex,
        }


def _values(f) -> np.ndarray:
    return f.coeffs if isinstance(f, CoeffVector) else np.asarray(f, dtype=np.int64)


def coeff_set(f) -> CoeffSummary:
    c = _values(f)
    if c.size == 0:
        raise ValueError("empty coefficient vector")
    lo, hi = int(c.min()), int(c.max())
    counts = np.bincount(c - lo)
    present = (np.flatnonzero(counts) + lo).tolist()
    gaps = (np.flatnonzero(counts == 0) + lo).tolist()
    with_zero = set(present) | {0}
    lo0, hi0 = min(lo, 0), max(hi, 0)
    return CoeffSummary(
        min=lo,
        max=hi,
        present=tuple(present),
        gaps=tuple(gaps),
        zero_included=0 in present,
        flat=with_zero <= {-1, 0, 1},
        jump_one=bool(c.size < 2 or np.abs(np.diff(c)).max() <= 1),
        convex=len(with_zero) == hi0 - lo0 + 1,
        strongly_convex=not gaps,
    )


def is_flat(s: CoeffSummary) -> bool:
    return set(s.present) | {0} <= {-1, 0, 1}


def check_jump_one(f) -> tuple[bool, int | None]:
    """Whether neighbouring coefficients differ by at most one.

    On failure the smallest k with |c[k] - c[k-1]| > 1 is returned.
    """
    c = _values(f)
    if c.size < 2:
        return True, None
    bad = np.flatnonzero(np.abs(np.diff(c)) > 1)
    if bad.size:
        return False, int(bad[0]) + 1
    return True, None


def is_coefficient_optimal(p: int, s: CoeffSummary) -> bool:
    return s.max - s.min == p


def at_most_three_prime_factors(f: Factorization) -> bool:
    """Counted with multiplicity."""
    return f.big_omega <= 3


def at_most_three_distinct_odd_prime_factors(f: Factorization) -> bool:
    return f.odd_omega <= 3


@dataclass(frozen=True)
class HeightRow:
    q: int
    r: int
    height: int  # max |a_pqr(k)|
    k: int  # smallest index attaining it
    value: int  # signed coefficient at k


@dataclass(frozen=True)
class HeightResult:
    p: int
    height: int
    witness: tuple[int, int, int] | None
    value: int
    rows: list[HeightRow] = field(default_factory=list)


def triple_height(p: int, q: int, r: int) -> HeightRow:
    ctx = make_kaplan_context(p, q, r)
    # palindromic, so the first half (inclusive of the middle) suffices
    c = coeff_range(0, ctx.triple.degree // 2, ctx)
    a = np.abs(c)
    k = int(a.argmax())
    return HeightRow(q, r, int(a[k]), k, int(c[k]))


def height_scan(p: int, q_max: int, r_max: int, threads: int = 1) -> HeightResult:
    """Largest |a_pqr(k)| over primes p < q <= q_max, q < r <= r_max."""
    pairs = [(q, r) for q in odd_primes_between(p, q_max) for r in odd_primes_between(q, r_max)]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        rows = list(pool.map(lambda qr: triple_height(p, *qr), pairs))
    if not rows:
        return HeightResult(p, 0, None, 0, rows)
    # rows are already in (q, r) order and each k is minimal, so the first max wins
    best = max(rows, key=lambda row: row.height)
    return HeightResult(p, best.height, (best.q, best.r, best.k), best.value, rows)
