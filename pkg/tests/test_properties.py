import numpy as np
import pytest

from cyclocoeff.arith import factorize
from cyclocoeff.kaplan import coeff_range, make_kaplan_context
from cyclocoeff.polys import cyclotomic_poly, inverse_cyclotomic_poly, phi_coeffs
from cyclocoeff.properties import (
    at_most_three_distinct_odd_prime_factors,
    at_most_three_prime_factors,
    check_jump_one,
    coeff_set,
    height_scan,
    is_coefficient_optimal,
    is_flat,
)
from cyclocoeff.scans import convex_scan, jump_scan, optimal_scan, ternary_triples


def test_summary_of_prime():
    s = coeff_set(cyclotomic_poly(7))
    assert s.present == (1,) and not s.zero_included
    assert s.flat and s.jump_one and s.convex and s.strongly_convex


def test_phi_2p_convex_not_strongly():
    for p in (3, 5, 7, 11, 13):
        s = coeff_set(cyclotomic_poly(2 * p))
        assert s.flat and s.convex and not s.strongly_convex and s.gaps == (0,)


def test_summary_quaternary_example():
    s = coeff_set(cyclotomic_poly(530689))
    assert (s.min, s.max) == (-50, 52)
    assert s.gaps == (-48, 47, 48, 49, 50, 51)
    assert not s.convex


def test_summary_7735_as_computed():
    s = coeff_set(cyclotomic_poly(7735))
    assert not s.convex
    assert (s.min, s.max, s.gaps) == (-7, 5, (-6,))


def test_summary_invariants_on_many_polys():
    for n in range(1, 3000, 13):
        for poly in (cyclotomic_poly(n), inverse_cyclotomic_poly(n)):
            s = coeff_set(poly)
            assert set(s.present) <= set(range(s.min, s.max + 1))
            assert s.min in s.present and s.max in s.present
            assert not set(s.gaps) & set(s.present)
            assert s.strongly_convex == (not s.gaps)
            with_zero = sorted(set(s.present) | {0})
            assert s.convex == (with_zero == list(range(with_zero[0], with_zero[-1] + 1)))
            assert s.flat == is_flat(s)
            if s.flat:
                assert s.convex


@pytest.mark.parametrize("n, flat", [(15, True), (105, False), (13, True), (385, False)])
def test_is_flat(n, flat):
    assert is_flat(coeff_set(cyclotomic_poly(n))) is flat


def test_check_jump_one_basics():
    assert check_jump_one([5]) == (True, None)
    assert check_jump_one([0, 1, 2, 1]) == (True, None)
    assert check_jump_one([0, 1, 3, 1, -5]) == (False, 2)


def test_non_flat_ternary_doubles_lose_jump_one():
    n = 17 * 29 * 41
    ok, k = check_jump_one(cyclotomic_poly(2 * n))
    assert not ok
    a = cyclotomic_poly(n)
    big = cyclotomic_poly(2 * n)
    assert abs(int(big[k]) - int(big[k - 1])) == abs(a.coeff(k) + a.coeff(k - 1))


def test_coefficient_optimal_examples():
    assert is_coefficient_optimal(5, coeff_set(cyclotomic_poly(595)))
    assert coeff_set(cyclotomic_poly(595)).present == (-2, -1, 0, 1, 2, 3)
    # Phi_105 runs from -2 to 1, a spread of 3 = p
    s105 = coeff_set(cyclotomic_poly(105))
    assert (s105.min, s105.max) == (-2, 1) and is_coefficient_optimal(3, s105)
    flat = coeff_set(np.array([1, -1, 0, 1]))
    assert not is_coefficient_optimal(3, flat) and not is_coefficient_optimal(5, flat)


def test_spread_never_exceeds_p_small_ternary():
    for p, q, r in ternary_triples(20000):
        c = phi_coeffs(p * q * r)
        assert int(c.max()) - int(c.min()) <= p


def test_height_scan_examples():
    h3 = height_scan(3, 100, 100)
    assert h3.height == 2 and h3.witness == (5, 7, 7)
    h17 = height_scan(17, 30, 45)
    assert h17.height >= 10 and h17.witness == (29, 41, 4801) and h17.value == -10
    h5 = height_scan(5, 40, 60)
    assert h5.height <= 3


def test_height_scan_deterministic_across_threads():
    a = height_scan(7, 30, 60, threads=1)
    b = height_scan(7, 30, 60, threads=4)
    assert a == b


def test_height_scan_half_range_is_enough():
    ctx = make_kaplan_context(11, 13, 37)
    full = np.abs(coeff_range(0, ctx.triple.degree, ctx)).max()
    row = height_scan(11, 13, 37).rows[-1]
    assert (row.q, row.r) == (13, 37) and row.height == full


def test_factor_predicates():
    assert at_most_three_prime_factors(factorize(8))
    assert not at_most_three_prime_factors(factorize(16))
    assert not at_most_three_prime_factors(factorize(7735))
    assert at_most_three_distinct_odd_prime_factors(factorize(2**5 * 3 * 5 * 7))
    assert not at_most_three_distinct_odd_prime_factors(factorize(7735))


def test_ternary_sets_are_ranges():
    for p, q, r in ternary_triples(15000):
        assert coeff_set(phi_coeffs(p * q * r)).strongly_convex


def test_non_flat_ternary_doubles_violate_jump_one():
    seen = 0
    for p, q, r in ternary_triples(6000):
        n = p * q * r
        a = phi_coeffs(n)
        if np.abs(a).max() <= 1:
            continue
        seen += 1
        ok, _ = check_jump_one(phi_coeffs(2 * n))
        assert not ok
        # at an index where |a_n(k)| = m > 1 the doubled polynomial jumps by >= 2m - 1
        k = int(np.abs(a).argmax())
        m = abs(int(a[k]))
        b = phi_coeffs(2 * n)
        assert abs(int(b[k]) - int(b[k - 1])) == abs(int(a[k]) + int(a[k - 1])) >= 2 * m - 1
    assert seen > 10


def test_spread_p_forces_full_range():
    res = optimal_scan(20000)
    assert res.findings
    for f in res.findings:
        s = coeff_set(phi_coeffs(f["n"]))
        assert s.present == tuple(range(f["min"], f["max"] + 1))


def test_scans_small():
    assert jump_scan(5000).findings == []
    assert jump_scan(5000, source="kaplan").findings == []
    assert jump_scan(200, ternary_only=False).findings  # Phi_2n-type failures exist
    assert convex_scan(3000, "phi", 3).findings == []
    assert convex_scan(3000, "psi", 3).findings == []
    res = convex_scan(8000, "phi", 4, threads=3)
    assert [f["n"] for f in res.findings] == [7735]
