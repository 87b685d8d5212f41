import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from scipy.stats import chisquare

from sl2trace.sl2 import (
    ConjClass,
    IDENTITY_ARITY,
    SL2Mat,
    check_matrix_identity,
    classify_conjugacy,
    commutator,
    enumerate_sl2,
    identity,
    is_prime,
    random_sl2,
    random_sl2_rational,
    sample_genus2_tuple,
    trace_of,
    tuples_for,
    word_eval,
)

P = 10007
seeds = st.integers(0, 2**32 - 1)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_det_checked():
    with pytest.raises(ValueError):
        SL2Mat(1, 1, 1, 1)
    with pytest.raises(ValueError):
        SL2Mat(1, 0, 0, 2, p=7)
    SL2Mat(2, 0, 0, 4, p=7)  # 8 = 1 mod 7
    SL2Mat(Fraction(1, 2), 0, 0, 2)


def test_enumerate_sizes():
    for p in (2, 3, 5):
        assert len(enumerate_sl2(p)) == p**3 - p
        assert len(set(enumerate_sl2(p))) == p**3 - p


def test_group_ops():
    A = SL2Mat(2, 3, 1, 2, p=7)
    assert (A @ A.inverse()).is_scalar(1)
    assert A**3 == A @ A @ A
    assert A**-2 == (A.inverse()) @ (A.inverse())
    assert A**0 == identity(7)


def test_word_eval_and_trace():
    A, B = SL2Mat(1, 1, 0, 1), SL2Mat(1, 0, 1, 1)
    assert word_eval("[a,b]", [A, B]) == commutator(A, B)
    assert trace_of("a b", {1: A, 2: B}) == 3
    assert word_eval("", [A]) == identity()
    with pytest.raises(ValueError):
        word_eval("a c", [A, B])


def test_classification():
    p = 7
    assert classify_conjugacy(identity(p)) == ConjClass("Id")
    assert classify_conjugacy(SL2Mat(-1, 0, 0, -1, p)) == ConjClass("MinusId")
    assert classify_conjugacy(SL2Mat(1, 1, 0, 1, p)).tag == "JPlus"
    assert classify_conjugacy(SL2Mat(-1, 1, 0, -1, p)).tag == "JMinus"
    c = classify_conjugacy(SL2Mat(2, 0, 0, 4, p))
    assert c.tag == "Diag" and c.trace == 6


def test_classification_is_conjugation_invariant():
    rng = random.Random(3)
    for _ in range(200):
        M, g = random_sl2(11, rng), random_sl2(11, rng)
        assert classify_conjugacy(g @ M @ g.inverse()) == classify_conjugacy(M)


@pytest.mark.parametrize("name", sorted(IDENTITY_ARITY))
def test_identities_exhaustive_f3(name):
    for mats in tuples_for(name, enumerate_sl2(3)):
        assert check_matrix_identity(name, mats)


@pytest.mark.parametrize("name", sorted(IDENTITY_ARITY))
@given(seed=seeds)
@settings(max_examples=40)
def test_identities_random(name, seed):
    rng = random.Random(seed)
    mats = [random_sl2(P, rng) for _ in range(IDENTITY_ARITY[name])]
    assert check_matrix_identity(name, mats)
    rat = [random_sl2_rational(rng) for _ in range(IDENTITY_ARITY[name])]
    assert check_matrix_identity(name, rat)


def test_identity_arity_checked():
    with pytest.raises(ValueError):
        check_matrix_identity("ttt", [identity(5)])
    with pytest.raises(ValueError):
        check_matrix_identity("nope", [identity(5)])


def test_random_sl2_is_uniform():
    # 10^5 draws over the 1320 elements of SL2(F_11)
    p, n = 11, 100_000
    rng = random.Random(2024)
    counts = Counter(random_sl2(p, rng).entries for _ in range(n))
    assert len(counts) == p**3 - p
    _, pval = chisquare(list(counts.values()))
    assert pval > 1e-3


def test_random_rational_has_det_one():
    rng = random.Random(0)
    for _ in range(50):
        M = random_sl2_rational(rng)
        a, b, c, d = M.entries
        assert a * d - b * c == 1


@pytest.mark.parametrize("p", [5, 7, 11])
def test_genus2_sampler(p):
    rng = random.Random(p)
    for _ in range(20):
        A, B, C, D = sample_genus2_tuple(p, rng)
        assert (commutator(A, B) @ commutator(C, D)).is_scalar(1)
