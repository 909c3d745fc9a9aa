"""Exact integer utilities: primality, factorization, inverses, CRT, totient.

Everything here works on Python ints, but values are expected to stay inside
the signed 64-bit range; :func:`checked_mul` enforces that where products of
primes are formed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from .errors import NotCoprime, NotInvertible

INT64_MAX = (1 << 63) - 1

# Deterministic below _MR_LIMIT, which covers the whole 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def checked_mul(*factors: int) -> int:
    """Product of ``factors``, raising OverflowError outside signed 64-bit."""
    out = 1
    for f in factors:
        out *= f
        if abs(out) > INT64_MAX:
            raise OverflowError(f"product exceeds 64-bit range: {factors}")
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise OverflowError("witness set not certified this far")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """Sieve of Eratosthenes, inclusive bound."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, v in enumerate(sieve) if v]


def odd_primes_between(lo: int, hi: int) -> list[int]:
    """Odd primes p with lo < p <= hi."""
    return [p for p in primes_up_to(hi) if p > max(lo, 2)]


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factor list {self.factors}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def big_omega(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(e for _, e in self.factors)

    @property
    def odd_omega(self) -> int:
        return sum(1 for p, _ in self.factors if p != 2)

    @property
    def radical(self) -> int:
        return math.prod(self.primes)

    @property
    def squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**j for d in divs for j in range(e + 1)]
        return sorted(divs)


def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    m = n
    out = []
    for p in (2, 3):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            out.append((p, e))
    p, step = 5, 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if m > 1:
        out.append((m, 1))
    return Factorization(n, tuple(out))


def as_factorization(f: Factorization | int) -> Factorization:
    return f if isinstance(f, Factorization) else factorize(f)


def euler_phi(f: Factorization | int) -> int:
    f = as_factorization(f)
    out = 1
    for p, e in f.factors:
        out *= p ** (e - 1) * (p - 1)
    return out


def mobius(f: Factorization | int) -> int:
    f = as_factorization(f)
    if not f.squarefree:
        return 0
    return -1 if f.omega % 2 else 1


def mod_inverse(a: int, m: int) -> int:
    if m < 2:
        raise ValueError("modulus must be at least 2")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NotInvertible(f"{a} is not invertible modulo {m}") from None


def crt2(r1: int, m1: int, r2: int, m2: int) -> int:
    """The unique x in [0, m1*m2) with x = r1 (mod m1) and x = r2 (mod m2)."""
    if math.gcd(m1, m2) != 1:
        raise NotCoprime(f"moduli {m1} and {m2} are not coprime")
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return (r1 + m1 * t) % (m1 * m2)


def crt(residues: Iterable[int], moduli: Iterable[int]) -> tuple[int, int]:
    """Fold :func:`crt2` over several pairwise coprime moduli."""
    return reduce(
        lambda acc, rm: (crt2(acc[0], acc[1], rm[0], rm[1]), acc[1] * rm[1]),
        zip(residues, moduli),
        (0, 1),
    )


def primes_in_progression(residue: int, modulus: int, start: int, limit: int) -> Iterator[int]:
    """Primes x = residue (mod modulus) with start < x <= limit, ascending."""
    x = residue % modulus
    if x <= start:
        x += ((start - x) // modulus + 1) * modulus
    while x <= limit:
        if is_prime(x):
            yield x
        x += modulus
