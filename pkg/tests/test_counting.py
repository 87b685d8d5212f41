from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sl2trace.counting import (
    CountRecord,
    count_all_fibers,
    count_commuting_pairs,
    count_fiber,
    fit_count_polynomial,
    kernel_self_test,
    records_to_csv,
)
from sl2trace.poly import EPoly

q = EPoly.q()
SMALL_PRIMES = [3, 5, 7, 11, 13]


def naive(p, t):
    return sum(1 for x, y, z in product(range(p), repeat=3) if (x * x + y * y + z * z - x * y * z - 2 - t) % p == 0)


@pytest.mark.parametrize("p,t,method,n", [
    (3, 2, "brute", 10), (5, -2, "brute", 41), (3, -2, "brute", 1),
    (3, 0, "brute", 16), (5, 2, "fast", 26),
])
def test_known_counts(p, t, method, n):
    rec = count_fiber(p, t, method)
    assert rec.n == n and rec.t == t % p and rec.method == method


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_fast_equals_brute_and_partition(p):
    fast = count_all_fibers(p, "fast")
    brute = count_all_fibers(p, "brute")
    assert [fast[t].n for t in range(p)] == [brute[t].n for t in range(p)]
    assert [count_fiber(p, t).n for t in range(p)] == [fast[t].n for t in range(p)]
    assert sum(r.n for r in fast.values()) == p**3


@given(st.sampled_from([3, 5, 7]), st.integers(-20, 20))
@settings(max_examples=30, deadline=None)
def test_against_naive_enumeration(p, t):
    assert count_fiber(p, t, "fast").n == naive(p, t)


def test_counts_mod_seven():
    assert all(r.n % 7 == 1 for r in count_all_fibers(7).values())


@pytest.mark.parametrize("p,t", [(5, 0), (7, 3), (11, 2), (13, 11)])
def test_kernel_self_test(p, t):
    assert kernel_self_test(p, t)


def test_parallel_matches_serial():
    assert count_fiber(101, 5, workers=3) == count_fiber(101, 5, workers=1)
    assert count_fiber(31, 4, "brute", workers=2) == count_fiber(31, 4, "brute")
    assert count_all_fibers(13, "brute", workers=2) == count_all_fibers(13, "brute")


def test_errors():
    with pytest.raises(ValueError):
        count_fiber(2, 0, "fast")
    with pytest.raises(ValueError):
        count_fiber(9, 0)
    with pytest.raises(ValueError):
        count_fiber(5, 0, "slow")
    assert count_fiber(2, 0, "brute").n == naive(2, 0)


def test_fit_synthetic():
    assert fit_count_polynomial([(3, 16), (5, 36), (7, 64)]).poly == q * q + 2 * q + 1
    with pytest.raises(ValueError):
        fit_count_polynomial([(3, 1), (5, 2)])
    with pytest.raises(ValueError):
        fit_count_polynomial([(3, 1), (3, 2), (5, 4)])


def test_fit_t2():
    recs = [count_fiber(p, 2) for p in (3, 5, 7, 11)]
    assert fit_count_polynomial(recs).poly == q * q + 1


def test_fit_tminus2_has_no_integer_fit():
    fit = fit_count_polynomial([count_fiber(p, -2) for p in (3, 5, 7)])
    assert fit.poly is None and not fit.fits


def test_fit_reports_residuals():
    fit = fit_count_polynomial([(3, 10), (5, 26), (7, 50), (11, 100)])
    assert fit.poly is None
    assert fit.residuals[11] == -22


@pytest.mark.parametrize("p,n", [(2, 18), (3, 168), (5, 1080)])
def test_commuting_pairs(p, n):
    assert count_commuting_pairs(p) == n


def test_commuting_pairs_range():
    with pytest.raises(ValueError):
        count_commuting_pairs(11)


def test_csv():
    text = records_to_csv([CountRecord(3, 2, 10, "brute")])
    assert text == "p,t,n,method\n3,2,10,brute\n"


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_t_minus_two_depends_on_p_mod_4(p):
    # observed: n(p, -2) = p^2 + 3 chi(-1) p + 1, so the q^2 + 3q + 1 shape holds only for p = 1 mod 4
    eps = 1 if p % 4 == 1 else -1
    assert count_fiber(p, -2).n == p * p + 3 * eps * p + 1
    if p <= 13:
        assert naive(p, -2) == p * p + 3 * eps * p + 1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_t_two_is_q_squared_plus_one(p):
    assert count_fiber(p, 2).n == p * p + 1
