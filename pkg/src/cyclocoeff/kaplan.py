"""Ternary cyclotomic coefficients one index at a time.

For primes 2 < p < q < r, the coefficient of x^k in Phi_pqr is a signed sum
of 2p truncated binary coefficients of Phi_pq, taken at the indices
``f(m) = r^-1 (k - m) mod pq`` for m in [0, p) and m in [q, q + p). Each
coefficient therefore costs O(p) regardless of the size of pqr.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend, _pykernels
from .arith import checked_mul, is_prime, mod_inverse, primes_in_progression
from .binary import BinaryContext, b_value, make_context
from .errors import BadMirrorPrime, InvalidPrimes, SearchExhausted

# Products inside the compiled loop stay below 2^62 when pq fits in 31 bits.
_KERNEL_PQ_LIMIT = 1 << 31


@dataclass(frozen=True)
class PrimeTriple:
    p: int
    q: int
    r: int

    def __post_init__(self):
        p, q, r = self.p, self.q, self.r
        if not (2 < p < q < r and is_prime(p) and is_prime(q) and is_prime(r)):
            raise InvalidPrimes(f"need odd primes p < q < r, got ({p}, {q}, {r})")
        checked_mul(p, q, r)

    @property
    def n(self) -> int:
        return self.p * self.q * self.r

    @property
    def degree(self) -> int:
        return (self.p - 1) * (self.q - 1) * (self.r - 1)


@dataclass(frozen=True)
class KaplanContext:
    triple: PrimeTriple
    binary: BinaryContext
    r_inv: int


def make_kaplan_context(p: int, q: int, r: int) -> KaplanContext:
    triple = PrimeTriple(p, q, r)
    binary = make_context(p, q)
    return KaplanContext(triple, binary, mod_inverse(r, binary.pq))


def _as_ctx(ctx) -> KaplanContext:
    if isinstance(ctx, KaplanContext):
        return ctx
    return make_kaplan_context(*ctx)


def f_index(m: int, k: int, ctx: KaplanContext) -> int:
    """The representative of r^-1 (k - m) in [0, pq)."""
    return ctx.r_inv * (k - m) % ctx.binary.pq


def ternary_coeff_direct(k: int, ctx: KaplanContext) -> int:
    """Kaplan's sum written out term by term; slow but transparent."""
    p, q, r = ctx.triple.p, ctx.triple.q, ctx.triple.r
    return sum(
        b_value(f_index(m, k, ctx), ctx.binary, k, r)
        - b_value(f_index(m + q, k, ctx), ctx.binary, k, r)
        for m in range(p)
    )


def _kernel_args(ctx: KaplanContext):
    b = ctx.binary
    return (b.p, b.q, ctx.triple.r, b.rho, b.sigma, b.p_inv_q, b.q_inv_p, ctx.r_inv)


def coeff_range(k_lo: int, k_hi: int, ctx) -> np.ndarray:
    """Coefficients a_pqr(k) for k_lo <= k <= k_hi (inclusive)."""
    ctx = _as_ctx(ctx)
    if not 0 <= k_lo <= k_hi:
        raise ValueError(f"bad range [{k_lo}, {k_hi}]")
    kern = _backend if ctx.binary.pq < _KERNEL_PQ_LIMIT else _pykernels
    return kern.kaplan_range(*_kernel_args(ctx), k_lo, k_hi)


def ternary_coeff(k: int, ctx) -> int:
    """Coefficient of x^k in Phi_pqr; zero past the degree."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return int(coeff_range(k, k, ctx)[0])


def full_coefficients(ctx) -> np.ndarray:
    ctx = _as_ctx(ctx)
    return coeff_range(0, ctx.triple.degree, ctx)


def mirror_index(n_idx: int, ctx, t: int) -> int:
    """Index in Phi_pqt whose coefficient is the negative of a_pqr(n_idx)."""
    ctx = _as_ctx(ctx)
    p, q, r = ctx.triple.p, ctx.triple.q, ctx.triple.r
    pq = p * q
    if not (t > pq and is_prime(t) and (t + r) % pq == 0):
        raise BadMirrorPrime(f"t={t} must be a prime > {pq} with t = -{r} (mod {pq})")
    block, n0 = divmod(n_idx, r)
    n1 = (q + p - 1 - n0) % pq
    return block * t + n1


def find_mirror_prime(ctx, limit: int) -> int:
    """Smallest prime t > pq with t = -r (mod pq), searching up to ``limit``."""
    ctx = _as_ctx(ctx)
    pq = ctx.binary.pq
    for t in primes_in_progression(-ctx.triple.r, pq, pq, limit):
        return t
    raise SearchExhausted(f"no mirror prime below {limit}")

