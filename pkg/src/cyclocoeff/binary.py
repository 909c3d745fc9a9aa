"""Closed-form coefficients of binary cyclotomic polynomials.

For odd primes p < q every 0 <= m < pq has a p-part ``a`` in [0, q) with
``a*p = m (mod q)`` and a q-part ``b`` in [0, p) with ``b*q = m (mod p)``.
Then m is either ``a*p + b*q`` or ``a*p + b*q - pq``, and the sign of the
coefficient of x^m in Phi_pq is read off from where (a, b) sits relative to
the pair (rho, sigma) solving ``1 + pq = (rho+1)*p + (sigma+1)*q``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .arith import is_prime, mod_inverse
from .errors import InvalidPrimes, OutOfRange


class PartPair(NamedTuple):
    p_part: int
    q_part: int


@dataclass(frozen=True)
class BinaryContext:
    p: int
    q: int
    rho: int
    sigma: int
    pq: int
    p_inv_q: int  # p^-1 mod q
    q_inv_p: int  # q^-1 mod p


def make_context(p: int, q: int) -> BinaryContext:
    if not (2 < p < q and is_prime(p) and is_prime(q)):
        raise InvalidPrimes(f"need odd primes p < q, got ({p}, {q})")
    pq = p * q
    p_inv_q = mod_inverse(p, q)
    q_inv_p = mod_inverse(q, p)
    # (sigma+1)*q = 1 (mod p) pins sigma+1 in [1, p-1]; rho follows
    sigma = q_inv_p - 1
    rho, rest = divmod(1 + pq - (sigma + 1) * q, p)
    rho -= 1
    ctx = BinaryContext(p, q, rho, sigma, pq, p_inv_q, q_inv_p)
    assert rest == 0 and 0 <= rho <= q - 2 and 0 <= sigma <= p - 2
    assert (rho, sigma) == tuple(parts((p - 1) * (q - 1), ctx)), "part formulation disagrees"
    return ctx


def parts(m: int, ctx: BinaryContext) -> PartPair:
    if not 0 <= m < ctx.pq:
        raise OutOfRange(f"index {m} outside [0, {ctx.pq})")
    return PartPair(m * ctx.p_inv_q % ctx.q, m * ctx.q_inv_p % ctx.p)


def binary_coeff(m: int, ctx: BinaryContext) -> int:
    """Coefficient of x^m in Phi_pq, for 0 <= m < pq."""
    a, b = parts(m, ctx)
    if a <= ctx.rho and b <= ctx.sigma:
        return 1
    if a > ctx.rho and b > ctx.sigma:
        return -1
    return 0


def b_value(i: int, ctx: BinaryContext, k: int, r: int) -> int:
    """Binary coefficient at i, kept only when r*i <= k.

    Evaluated through the parts (never through i itself), so that comparing
    against ``binary_coeff(i) if r*i <= k else 0`` is a real check.
    """
    a, b = parts(i, ctx)
    p, q = ctx.p, ctx.q
    if a <= ctx.rho and b <= ctx.sigma and r * (a * p + b * q) <= k:
        return 1
    if a > ctx.rho and b > ctx.sigma and r * (a * p + b * q - ctx.pq) <= k:
        return -1
    return 0


def reconstruct(m: int, ctx: BinaryContext) -> tuple[int, int]:
    """Return ``(delta, m)`` with ``m = a*p + b*q - delta*pq`` for delta in {0, 1}."""
    a, b = parts(m, ctx)
    s = a * ctx.p + b * ctx.q
    delta = 0 if s < ctx.pq else 1
    return delta, s - delta * ctx.pq
