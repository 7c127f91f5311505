from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from derangement_spectrum import partitions as P
from derangement_spectrum.shifted import (
    DenominatorZero,
    InnerNotContained,
    ShapeTooLarge,
    falling,
    h_star,
    h_star_banded,
    h_star_rec,
    s_star,
    skew_syt_count,
)
from derangement_spectrum.verify import h_star_bruteforce


def points(max_n):
    for n in range(max_n + 1):
        yield from P.enumerate_partitions(n)


def test_falling():
    assert falling(123, 0) == 1
    assert falling(-4, 0) == 1
    assert falling(5, 2) == 20
    assert falling(3, 5) == 0
    assert falling(-2, 3) == -24
    with pytest.raises(ValueError):
        falling(3, -1)


def test_h_star_examples():
    assert h_star(0, (4, 2, 1)) == 1
    assert h_star(0, ()) == 1
    assert h_star(1, (4, 2, 1)) == 7
    assert h_star(3, (6,)) == 4 * 5 * 6
    assert h_star(2, ()) == 0


def test_h_star_rec_examples():
    assert h_star_rec(1, (2, 2)) == 4
    assert h_star_rec(2, (3, 1)) == 8
    assert h_star_rec(0, ()) == 1


def test_h_star_banded_examples():
    assert h_star_banded(2, 2, 2, 1, 2) == h_star(2, (2, 2, 2))
    assert h_star_banded(0, 5, 3, 2, 1) == 1
    assert h_star_banded(2, 3, 2, 2, 1) == h_star(2, (3, 2, 2, 1))


def test_h_star_matches_bruteforce():
    # the literal multiset sum is exponential; keep k <= 8 and at most 6 variables
    for lam in points(10):
        if len(lam) > 6:
            continue
        for k in range(9):
            assert h_star(k, lam) == h_star_bruteforce(k, lam)


def test_route_equality():
    for lam in points(10):
        for k in range(11):
            value = h_star(k, lam)
            assert h_star_rec(k, lam) == value
            if sum(lam) <= 8:
                assert s_star((k,), lam) == value


def test_banded_route():
    for x in range(7):
        for c in range(6):
            for l in range(1, 4):
                for y in range(5):
                    for k in range(7):
                        assert h_star_banded(k, x, c, l, y) == h_star(k, (x,) + (c,) * l + (y,))


@settings(max_examples=200)
@given(st.lists(st.integers(0, 10), max_size=6), st.integers(0, 8))
def test_h_star_stability_and_routes_random(pt, k):
    pt = tuple(pt)
    assert h_star(k, pt + (0,)) == h_star(k, pt)
    assert h_star_rec(k, pt) == h_star(k, pt)
    assert h_star_bruteforce(k, pt) == h_star(k, pt)


@settings(max_examples=100)
@given(st.lists(st.integers(0, 10), min_size=1, max_size=5), st.integers(0, 8))
def test_s_star_stability_random(pt, k):
    lam = tuple(sorted(pt, reverse=True))
    mu = P.strip_zeros((min(k, 3), 1 if k > 3 else 0))
    assert s_star(mu, lam + (0,)) == s_star(mu, lam)


def test_one_variable_closed_form():
    for lam in range(13):
        for k in range(lam + 1):
            assert h_star(k, (lam,)) == falling(lam, k)


def test_s_star_examples():
    assert s_star((3,), (2, 2)) == 0
    assert s_star((2, 1), (2, 1)) == 3
    assert isinstance(s_star((2, 1), (3, 1)), Fraction)


def test_vanishing_outside_containment():
    for mu in points(6):
        for lam in points(8):
            value = s_star(mu, lam)
            assert value.denominator == 1
            if not P.contains(lam, mu):
                assert value == 0
        assert s_star(mu, mu) == P.hook_product(mu)


def test_s_star_denominator_zero():
    # shifted arguments x_i + n - i collide: 0 + 1 == 1 + 0
    with pytest.raises(DenominatorZero):
        s_star((1,), (0, 1))


def test_skew_syt_count_examples():
    assert skew_syt_count((3, 1)) == 3
    assert skew_syt_count((3, 2, 1), (3, 2, 1)) == 1
    assert skew_syt_count((2, 2), (1,)) == 2
    with pytest.raises(InnerNotContained):
        skew_syt_count((2, 1), (3,))
    with pytest.raises(ShapeTooLarge):
        skew_syt_count((13,))
    assert skew_syt_count((13,), cap=13) == 1


def test_skew_count_matches_dim():
    for lam in points(8):
        assert skew_syt_count(lam) == P.dim(lam)


def test_dimension_ratio_one_row():
    for lam in points(8):
        n, d = sum(lam), P.dim(lam)
        for k in range(n + 1):
            inner = P.strip_zeros((k,))
            skew = skew_syt_count(lam, inner) if P.contains(lam, inner) else 0
            assert Fraction(skew, d) == Fraction(h_star(k, lam), falling(n, k))


def test_dimension_ratio_general_mu():
    for lam in points(7):
        n, d = sum(lam), P.dim(lam)
        for mu in points(4):
            if sum(mu) > n:
                continue
            skew = skew_syt_count(lam, mu) if P.contains(lam, mu) else 0
            assert Fraction(skew, d) == s_star(mu, lam) / falling(n, sum(mu))


def test_two_variable_strict_inequality():
    for lam in range(1, 13):
        for last in range(1, lam + 1):
            for k in range(2, lam + 1):
                assert h_star(k, (lam, last)) < h_star(k, (lam + 1, last - 1))


def test_banded_strict_inequality():
    for l in range(1, 5):
        for lam in range(2, 11):
            for k in range(2, lam + 1):
                lo = h_star(k, (lam,) * (l + 2))
                hi = h_star(k, (lam + 1,) + (lam,) * l + (lam - 1,))
                assert lo < hi
                assert lo == h_star_banded(k, lam, lam, l, lam)
