"""Explicit ternary families whose coefficients span a full range of width p.

Two constructions are covered, both with q = 2 (mod p):

* ``lemma4`` (Moller's family): r = (p-1)/2 (mod p), r = (q-1)/2 (mod q).
  At k = (p-1)(qr+1)/2 the coefficient is (p+1)/2, at k - r it is -(p-1)/2.
* ``lemma6`` (the mirrored family): r = (p+1)/2 (mod p), r = (q+1)/2 (mod q),
  r > q. At k = (p-1)(qr+1)/2 + q the coefficient is -(p+1)/2, at k - r it
  is (p-1)/2.

Since neighbouring ternary coefficients differ by at most one and the spread
of any ternary coefficient set is at most p, every value between the two
extremes occurs in the window [k - r, k] and the set is exactly that range.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .arith import crt2, is_prime, primes_in_progression
from .errors import InvalidPrimes, SearchExhausted
from .kaplan import coeff_range, find_mirror_prime, make_kaplan_context, mirror_index, ternary_coeff
from .polys import cyclotomic_poly, cyclotomic_series, get_cap
from .properties import check_jump_one, coeff_set, is_coefficient_optimal


class FamilyKind(str, enum.Enum):
    LEMMA4 = "lemma4"
    LEMMA6 = "lemma6"


@dataclass(frozen=True)
class FamilyInstance:
    kind: FamilyKind
    p: int
    q: int
    r: int
    n: int
    k: int
    expected_at_k: int
    lo_index: int
    expected_at_lo: int

    @property
    def expected_range(self) -> tuple[int, int]:
        return tuple(sorted((self.expected_at_k, self.expected_at_lo)))

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "n": self.n,
            "k": self.k,
            "expected_at_k": self.expected_at_k,
            "lo_index": self.lo_index,
            "expected_at_lo": self.expected_at_lo,
        }


def find_family_instance(kind, p: int, search_limit: int = 10**7) -> FamilyInstance:
    kind = FamilyKind(kind)
    if p <= 3 or not is_prime(p):
        raise InvalidPrimes(f"p must be a prime > 3, got {p}")
    q = next(primes_in_progression(2, p, p, search_limit), None)
    if q is None:
        raise SearchExhausted(f"no prime q = 2 (mod {p}) below {search_limit}")
    half = (p - 1) // 2
    if kind is FamilyKind.LEMMA4:
        cls = crt2((p - 1) // 2, p, (q - 1) // 2, q)
    else:
        cls = crt2((p + 1) // 2, p, (q + 1) // 2, q)
    r = next(primes_in_progression(cls, p * q, q, search_limit), None)
    if r is None:
        raise SearchExhausted(f"no admissible r below {search_limit}")
    base = (p - 1) * (q * r + 1) // 2
    if kind is FamilyKind.LEMMA4:
        return FamilyInstance(kind, p, q, r, p * q * r, base, half + 1, base - r, -half)
    k = base + q
    return FamilyInstance(kind, p, q, r, p * q * r, k, -(half + 1), k - r, half)


def lehmer_index(inst: FamilyInstance) -> int:
    """Index (p-3)(qr+1)/2, where Moller's family has coefficient (p-1)/2."""
    return (inst.p - 3) * (inst.q * inst.r + 1) // 2


@dataclass(frozen=True)
class FamilyReport:
    instance: FamilyInstance
    kaplan_at_k: int
    kaplan_at_lo: int
    oracle_at_k: int | None
    oracle_at_lo: int | None
    lehmer: dict | None
    ok: bool

    def as_dict(self) -> dict:
        return {
            "kaplan_at_k": self.kaplan_at_k,
            "kaplan_at_lo": self.kaplan_at_lo,
            "oracle_at_k": self.oracle_at_k,
            "oracle_at_lo": self.oracle_at_lo,
            "lehmer": self.lehmer,
            "ok": self.ok,
        }


def verify_family(inst: FamilyInstance, cap: int | None = None) -> FamilyReport:
    cap = get_cap() if cap is None else cap
    ctx = make_kaplan_context(inst.p, inst.q, inst.r)
    at_k = ternary_coeff(inst.k, ctx)
    at_lo = ternary_coeff(inst.lo_index, ctx)
    wanted = [(at_k, inst.expected_at_k), (at_lo, inst.expected_at_lo)]
    o_k = o_lo = None
    series = None
    if inst.k < cap:
        series = cyclotomic_series(inst.n, inst.k + 1, cap)
        o_k, o_lo = int(series[inst.k]), int(series[inst.lo_index])
        wanted += [(o_k, inst.expected_at_k), (o_lo, inst.expected_at_lo)]
    lehmer = None
    if inst.kind is FamilyKind.LEMMA4:
        li = lehmer_index(inst)
        lehmer = {
            "index": li,
            "expected": (inst.p - 1) // 2,
            "kaplan": ternary_coeff(li, ctx),
            "oracle": None if series is None else int(series[li]),
        }
        wanted.append((lehmer["kaplan"], lehmer["expected"]))
        if series is not None:
            wanted.append((lehmer["oracle"], lehmer["expected"]))
    # past the oracle cap only the a priori bound |a| <= p backs up the values
    bounded = abs(at_k) <= inst.p and abs(at_lo) <= inst.p
    ok = bounded and all(got == exp for got, exp in wanted)
    return FamilyReport(inst, at_k, at_lo, o_k, o_lo, lehmer, ok)


@dataclass(frozen=True)
class RangeReport:
    instance: FamilyInstance
    present: tuple[int, ...]
    expected: tuple[int, int]
    matches: bool
    optimal: bool
    window_values: tuple[int, ...]
    window_complete: bool
    window_jump_one: bool

    def as_dict(self) -> dict:
        return {
            "present": list(self.present),
            "expected_range": list(self.expected),
            "matches": self.matches,
            "optimal": self.optimal,
            "window_values": list(self.window_values),
            "window_complete": self.window_complete,
            "window_jump_one": self.window_jump_one,
        }


def verify_optimal_range(inst: FamilyInstance, cap: int | None = None) -> RangeReport:
    phi = cyclotomic_poly(inst.n, cap)
    s = coeff_set(phi)
    lo, hi = inst.expected_range
    full = tuple(range(lo, hi + 1))
    window = phi.coeffs[inst.lo_index : inst.k + 1]
    wvals = tuple(np.unique(window).tolist())
    return RangeReport(
        instance=inst,
        present=s.present,
        expected=(lo, hi),
        matches=s.present == full,
        optimal=is_coefficient_optimal(inst.p, s),
        window_values=wvals,
        window_complete=wvals == full,
        window_jump_one=check_jump_one(window)[0],
    )


def remark_residue(inst: FamilyInstance) -> int:
    """2r mod pq: pq - 1 for the lemma4 family, 1 for the lemma6 family."""
    return 2 * inst.r % (inst.p * inst.q)


def mirror_check(inst: FamilyInstance, limit: int = 10**7) -> dict:
    """Transfer the distinguished coefficient to p*q*t, t = -r (mod pq)."""
    ctx = make_kaplan_context(inst.p, inst.q, inst.r)
    t = find_mirror_prime(ctx, limit)
    idx = mirror_index(inst.k, ctx, t)
    value = ternary_coeff(idx, (inst.p, inst.q, t))
    return {
        "t": t,
        "index": idx,
        "value": value,
        "source_value": inst.expected_at_k,
        "ok": value == -ternary_coeff(inst.k, ctx),
    }


def kaplan_window(inst: FamilyInstance) -> np.ndarray:
    return coeff_range(inst.lo_index, inst.k, make_kaplan_context(inst.p, inst.q, inst.r))


__all__ = [
    "FamilyKind",
    "FamilyInstance",
    "find_family_instance",
    "verify_family",
    "verify_optimal_range",
    "lehmer_index",
    "remark_residue",
    "mirror_check",
    "kaplan_window",
]
