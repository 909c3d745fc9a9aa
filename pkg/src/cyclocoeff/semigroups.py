"""Numerical semigroups generated by a few positive integers.

A semigroup here is the set of non-negative integer combinations of its
generators. When the generators are coprime its complement is finite, and
``(1 - x) * sum_{s in S} x^s`` is a polynomial of degree F(S) + 1, where F(S)
is the Frobenius number. For two primes p, q this polynomial is Phi_pq.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import NotNumerical
from .polys import CoeffVector, cyclotomic_poly, exact_div, x_pow_minus_one


@dataclass(frozen=True)
class SemigroupTable:
    generators: tuple[int, ...]
    membership: np.ndarray  # bool, index 0..bound
    frobenius: int | None
    bound: int

    @property
    def numerical(self) -> bool:
        return self.frobenius is not None

    def __contains__(self, m: int) -> bool:
        if m < 0:
            return False
        if m <= self.bound:
            return bool(self.membership[m])
        if self.numerical:
            return True
        g = reduce(math.gcd, self.generators)
        raise ValueError(f"{m} lies past the table bound {self.bound} (gcd {g})")

    def gaps(self) -> list[int]:
        """Non-members, i.e. the complement in Z>=0 (numerical tables only)."""
        if not self.numerical:
            raise NotNumerical("complement is infinite")
        return np.flatnonzero(~self.membership[: self.frobenius + 1]).tolist()


def _closure(gens: tuple[int, ...], size: int) -> np.ndarray:
    member = np.zeros(size, dtype=bool)
    member[0] = True
    for g in gens:
        if g >= size:
            continue
        # unbounded coin-change: walking upward reuses g any number of times
        for start in range(g):
            col = member[start::g]
            member[start::g] = np.logical_or.accumulate(col)
    return member


def build_table(generators, cap: int | None = None) -> SemigroupTable:
    """Membership table for S(generators).

    For coprime generators the table is grown until it holds ``min(generators)``
    consecutive members, which certifies everything beyond is a member. For
    non-coprime generators the table stops at ``cap`` (default: product of the
    two smallest generators) and the Frobenius number is ``None``.
    """
    gens = tuple(sorted(set(int(g) for g in generators)))
    if not gens or gens[0] < 1:
        raise ValueError("generators must be a nonempty list of positive integers")
    g_min = gens[0]
    if reduce(math.gcd, gens) != 1:
        size = (cap if cap is not None else gens[0] * (gens[1] if len(gens) > 1 else 2)) + 1
        return SemigroupTable(gens, _closure(gens, size), None, size - 1)
    size = max(2 * g_min, gens[0] * gens[-1] // 2 + 2)
    while True:
        member = _closure(gens, size)
        # the first run of g_min consecutive members starts right after F(S)
        run = np.convolve(member.astype(np.int32), np.ones(g_min, dtype=np.int32), "valid")
        hits = np.flatnonzero(run == g_min)
        if hits.size:
            start = int(hits[0])
            return SemigroupTable(gens, member[: start + g_min], start - 1, start + g_min - 1)
        size *= 2


def frobenius(generators) -> int:
    t = build_table(generators)
    if not t.numerical:
        raise NotNumerical("generators are not coprime")
    return t.frobenius


def semigroup_polynomial(t: SemigroupTable) -> CoeffVector:
    """(1 - x) H_S(x): coefficient k is member(k) - member(k - 1)."""
    if not t.numerical:
        raise NotNumerical("generators are not coprime")
    m = t.membership[: t.frobenius + 2].astype(np.int64)
    return CoeffVector(np.diff(m, prepend=0))


def binary_via_semigroup(p: int, q: int, k: int, table: SemigroupTable | None = None) -> int:
    if math.gcd(p, q) != 1:
        raise NotNumerical(f"gcd({p}, {q}) != 1")
    t = table if table is not None else build_table([p, q])
    return int(k in t) - int((k - 1) in t)


@dataclass(frozen=True)
class IndicatorResult:
    n: int
    holds: bool
    prefix_sums: list[int]
    exponents: list[int] | None  # members of S_n up to deg Phi_n when it exists


def indicator_check(n: int, cap: int | None = None) -> IndicatorResult:
    """Is Phi_n = (1 - x) sum_{s in S_n} x^s for some set S_n?

    Phi_n / (1 - x) has the prefix sums of Phi_n as coefficients, so such an
    S_n exists exactly when every prefix sum is 0 or 1.
    """
    c = cyclotomic_poly(n, cap).coeffs
    sums = np.cumsum(c)
    holds = bool(np.all((sums == 0) | (sums == 1)))
    exps = np.flatnonzero(sums == 1).tolist() if holds else None
    return IndicatorResult(n, holds, sums.tolist(), exps)


def divides_x_m_minus_1(generators, m_max: int) -> int | None:
    """Smallest m <= m_max with P_S(x) dividing x^m - 1, or None.

    Candidates are checked by exact division; no characterization is implied.
    """
    poly = semigroup_polynomial(build_table(generators))
    deg = poly.degree
    for m in range(max(deg, 1), m_max + 1):
        try:
            exact_div(x_pow_minus_one(m), poly)
        except ArithmeticError:
            continue
        return m
    return None
