import random

import numpy as np
import pytest

from cyclocoeff.arith import euler_phi, primes_up_to
from cyclocoeff.errors import BadMirrorPrime, InvalidPrimes
from cyclocoeff.kaplan import (
    PrimeTriple,
    coeff_range,
    f_index,
    find_mirror_prime,
    full_coefficients,
    make_kaplan_context,
    mirror_index,
    ternary_coeff,
    ternary_coeff_direct,
)
from cyclocoeff.polys import cyclotomic_poly, cyclotomic_series
from cyclocoeff.scans import kaplan_oracle_mismatches, ternary_triples

ODD_PRIMES = [p for p in primes_up_to(10**4) if p > 2]


def test_prime_triple_validation():
    assert PrimeTriple(3, 5, 7).n == 105
    for bad in [(3, 5, 5), (5, 3, 7), (3, 5, 9), (2, 3, 5)]:
        with pytest.raises(InvalidPrimes):
            PrimeTriple(*bad)


def test_f_index_linear_in_m():
    ctx = make_kaplan_context(5, 7, 17)
    for k in (0, 1, 100, 239, 240, 10**9):
        base = f_index(0, k, ctx)
        for m in range(12):
            assert f_index(m, k, ctx) == (base - m * ctx.r_inv) % 35
            assert 0 <= f_index(m, k, ctx) < 35


def test_f_index_moller_setting():
    ctx = make_kaplan_context(5, 7, 17)
    rho = ctx.binary.rho
    assert f_index(0, 240, ctx) == rho * 5
    for m in range(5):
        assert f_index(m, 240, ctx) == rho * 5 + 2 * m
        assert f_index(m + 7, 240, ctx) == rho * 5 + 2 * m + 2 * 7


@pytest.mark.parametrize(
    "triple, k, expected", [((3, 5, 7), 0, 1), ((17, 29, 41), 4801, -10), ((5, 7, 17), 240, 3)]
)
def test_ternary_coeff_examples(triple, k, expected):
    ctx = make_kaplan_context(*triple)
    assert ternary_coeff(k, ctx) == expected
    assert ternary_coeff_direct(k, ctx) == expected
    assert cyclotomic_poly(ctx.triple.n).coeff(k) == expected


def test_coeff_range_examples():
    ctx = make_kaplan_context(5, 7, 17)
    assert coeff_range(0, 0, ctx).tolist() == [1]
    window = coeff_range(223, 240, ctx)
    assert len(window) == 18 and window[0] == -2 and window[-1] == 3
    deg = ctx.triple.degree
    assert not coeff_range(deg + 1, deg + 500, ctx).any()
    assert coeff_range(deg, deg, ctx).tolist() == [1]


def test_coeff_range_matches_single_calls():
    ctx = make_kaplan_context(7, 11, 13)
    block = coeff_range(100, 300, ctx)
    assert block.tolist() == [ternary_coeff(k, ctx) for k in range(100, 301)]
    assert block.tolist() == [ternary_coeff_direct(k, ctx) for k in range(100, 301)]


def test_all_ternary_up_to_30000_match_oracle():
    triples = ternary_triples(30000)
    assert len(triples) > 2000
    for t in triples:
        assert kaplan_oracle_mismatches(t).size == 0, t


def test_random_triples_large_r_match_oracle():
    rng = random.Random(20240607)
    for _ in range(1000):
        p, q, r = sorted(rng.sample(ODD_PRIMES, 3))
        deg = (p - 1) * (q - 1) * (r - 1)
        k = rng.randint(0, min(deg, 20000))
        series = cyclotomic_series(p * q * r, k + 1)
        assert ternary_coeff(k, (p, q, r)) == series[k], (p, q, r, k)


@pytest.mark.parametrize("triple", [(3, 5, 7), (5, 7, 11), (5, 11, 13), (7, 11, 19), (11, 13, 17)])
def test_jump_one_bound_and_palindromy(triple):
    p = triple[0]
    ctx = make_kaplan_context(*triple)
    deg = euler_phi(ctx.triple.n)
    c = coeff_range(0, deg + 1, ctx)
    assert np.abs(np.diff(c)).max() <= 1
    assert np.abs(c).max() <= p
    assert c[deg + 1] == 0
    body = c[: deg + 1]
    assert np.array_equal(body, body[::-1])


def test_full_coefficients_length():
    ctx = make_kaplan_context(3, 5, 7)
    assert len(full_coefficients(ctx)) == 49


def test_mirror_index_example():
    ctx = make_kaplan_context(3, 5, 7)
    assert ternary_coeff(7, ctx) == -2
    t = find_mirror_prime(ctx, 1000)
    assert t == 23
    idx = mirror_index(7, ctx, t)
    assert idx == 30
    assert cyclotomic_poly(3 * 5 * 23).coeff(30) == 2


def test_mirror_index_trivial_residue():
    # n0 = q + p - 1 = 7 needs r > 7
    ctx = make_kaplan_context(3, 5, 11)
    t = find_mirror_prime(ctx, 10**4)
    assert mirror_index(7, ctx, t) == 0


def test_mirror_rejects_bad_t():
    ctx = make_kaplan_context(3, 5, 7)
    # 8 and 13 are too small, 37 is in the wrong class, 38 = -7 (mod 15) is composite
    for t in (8, 13, 37, 38):
        with pytest.raises(BadMirrorPrime):
            mirror_index(0, ctx, t)


def test_mirror_contract_random():
    rng = random.Random(7)
    small = [p for p in ODD_PRIMES if p < 60]
    checked = 0
    while checked < 60:
        p, q, r = sorted(rng.sample(small, 3))
        ctx = make_kaplan_context(p, q, r)
        t = find_mirror_prime(ctx, 10**6)
        for k in rng.sample(range(ctx.triple.degree + 1), 20):
            assert ternary_coeff(mirror_index(k, ctx, t), (p, q, t)) == -ternary_coeff(k, ctx)
        checked += 1
