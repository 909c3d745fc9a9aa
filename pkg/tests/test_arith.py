import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclocoeff.arith import (
    Factorization,
    checked_mul,
    crt,
    crt2,
    euler_phi,
    factorize,
    is_prime,
    mobius,
    mod_inverse,
    primes_in_progression,
    primes_up_to,
)
from cyclocoeff.errors import NotCoprime, NotInvertible
from oracles import brute_crt, brute_inverse, brute_is_prime, brute_phi

SMALL_PRIMES = primes_up_to(10**6)


@pytest.mark.parametrize("n, expected", [(2, True), (1, False), (0, False), (530689, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert [n for n in range(3000) if is_prime(n)] == [n for n in range(3000) if brute_is_prime(n)]


def test_is_prime_large_64bit():
    assert is_prime(2**61 - 1)
    assert is_prime(18446744073709551557)  # largest prime below 2^64
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime((2**31 - 1) * (2**31 + 11))


@pytest.mark.parametrize(
    "n, factors",
    [
        (7735, ((5, 1), (7, 1), (13, 1), (17, 1))),
        (1, ()),
        (60095, ((5, 1), (7, 1), (17, 1), (101, 1))),
        (530689, ((17, 1), (19, 1), (31, 1), (53, 1))),
        (360, ((2, 3), (3, 2), (5, 1))),
    ],
)
def test_factorize(n, factors):
    assert factorize(n).factors == factors


def test_factorization_rejects_bad_lists():
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (2, 2)))
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))


@pytest.mark.parametrize("n, expected", [(1, 1), (15, 8), (20213, 17920)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected == brute_phi(n)


def test_euler_phi_brute_count_to_10k():
    for n in range(1, 10**4 + 1):
        brute = int(np.count_nonzero(np.gcd(np.arange(1, n + 1), n) == 1))
        assert euler_phi(factorize(n)) == brute, n


def test_mobius_sum_vanishes():
    for n in range(2, 500):
        assert sum(mobius(d) for d in factorize(n).divisors()) == 0


@pytest.mark.parametrize("a, m, expected", [(1, 7, 1), (7, 15, 13), (41, 17 * 29, 481)])
def test_mod_inverse_examples(a, m, expected):
    assert mod_inverse(a, m) == expected == brute_inverse(a, m)


def test_mod_inverse_not_invertible():
    with pytest.raises(NotInvertible):
        mod_inverse(6, 15)


@given(st.integers(2, 10**12), st.integers(-(10**12), 10**12))
def test_mod_inverse_roundtrip(m, a):
    if math.gcd(a, m) != 1:
        return
    x = mod_inverse(a, m)
    assert 0 <= x < m and a * x % m == 1


@pytest.mark.parametrize(
    "args, expected", [((2, 5, 3, 7), 17), ((0, 11, 0, 13), 0), ((3, 5, 4, 7), 18)]
)
def test_crt2_examples(args, expected):
    assert crt2(*args) == expected == brute_crt(*args)


def test_crt2_not_coprime():
    with pytest.raises(NotCoprime):
        crt2(1, 6, 1, 9)


@given(st.integers(2, 10**9), st.integers(2, 10**9), st.integers(), st.integers())
def test_crt2_reduces_correctly(m1, m2, r1, r2):
    if math.gcd(m1, m2) != 1:
        return
    x = crt2(r1, m1, r2, m2)
    assert 0 <= x < m1 * m2
    assert x % m1 == r1 % m1 and x % m2 == r2 % m2


def test_crt_fold():
    x, m = crt([1, 2, 3], [5, 7, 11])
    assert m == 385 and (x % 5, x % 7, x % 11) == (1, 2, 3)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(SMALL_PRIMES), min_size=1, max_size=4, unique=True))
def test_factorize_inverts_product(primes):
    primes = sorted(primes)
    n = math.prod(primes)
    if n.bit_length() > 63:
        return
    assert factorize(n).factors == tuple((p, 1) for p in primes)


def test_checked_mul():
    assert checked_mul(3, 5, 7) == 105
    with pytest.raises(OverflowError):
        checked_mul(2**32, 2**32)


def test_primes_in_progression():
    # 18 + 35j for j < 6: 18, 53, 88, 123 = 3*41, 158, 193
    assert list(primes_in_progression(18, 35, 7, 200)) == [53, 193]
