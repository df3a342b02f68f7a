import math

import pytest
from hypothesis import given, strategies as st

from hyperprimes.hyperfactor import (HyperFactorization, enumerate_hyper3_reps, factor_usual, hyper_factorize,
                                     is_exp_prime, is_exp_prime_bf, perfect_power_table, recompose,
                                     side_conditions_hold)


def test_factor_usual():
    assert factor_usual(12) == [(2, 2), (3, 1)]
    assert factor_usual(1) == []
    assert factor_usual(3 ** 27) == [(3, 27)]


@pytest.mark.parametrize("q, expected", [(1, True), (2, True), (6, True), (8, False), (16, False),
                                         (36, False), (72, True)])
def test_exp_primes(q, expected):
    assert is_exp_prime(q) is expected
    assert is_exp_prime_bf(q) is expected


@pytest.mark.parametrize("n, terms", [(256, ((2, 4),)), (6, ((6, 1),)), (6 ** 12, ((6, 2), (2, 1))),
                                      (64, ((2, 2), (3, 1))), (7, ((7, 1),))])
def test_level_three_examples(n, terms):
    hf = hyper_factorize(n)
    assert hf.terms == terms
    assert recompose(hf) == n
    assert enumerate_hyper3_reps(n, 16) == [hf]


def test_lower_levels():
    assert hyper_factorize(12, 2).terms == ((2, 2), (3, 1))
    one = hyper_factorize(12, 1)
    assert one.degenerate and recompose(one) == 12
    with pytest.raises(ValueError):
        hyper_factorize(1)
    with pytest.raises(ValueError):
        hyper_factorize(8, 4)


def test_side_condition_detects_bad_towers():
    # 2^(2*2) = 16 written with a divisible tail
    assert not side_conditions_hold(HyperFactorization(3, ((2, 1), (2, 1))))


def test_perfect_power_table():
    table = perfect_power_table(100)
    assert [m for m in range(101) if table[m]] == [4, 8, 9, 16, 25, 27, 32, 36, 49, 64, 81, 100]


def test_round_trip_range():
    for n in range(2, 5000):
        hf = hyper_factorize(n)
        assert recompose(hf) == n
        assert all(is_exp_prime(q) for q, _ in hf.terms)
        assert side_conditions_hold(hf)


def test_uniqueness_small():
    for n in range(2, 200):
        assert enumerate_hyper3_reps(n, 200) == [hyper_factorize(n)]


@given(st.integers(2, 12), st.integers(1, 12))
def test_lemma_on_powers(u, v):
    # u^v is an exponential prime exactly when v = 1 and u is one
    q = u ** v
    assert is_exp_prime(q) == is_exp_prime_bf(q)
    if v > 1:
        assert not is_exp_prime(q)


@given(st.integers(2, 10 ** 9))
def test_exp_prime_matches_gcd(q):
    assert is_exp_prime(q) == (math.gcd(*(e for _, e in factor_usual(q))) == 1)


@given(st.integers(2, 10 ** 12))
def test_round_trip_large(n):
    assert recompose(hyper_factorize(n)) == n
