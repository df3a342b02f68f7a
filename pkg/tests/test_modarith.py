from itertools import product

import pytest
from hypothesis import given, strategies as st

from hyperprimes.modarith import (PLUS, CongruenceQuery, InversePair, congruent, exp_log_pair,
                                  fermat_kxy_check, fermat_linear_check, inverse_check, kxy_closed_form,
                                  kxy_op, linear_closed_form, linear_op, power_fold)
from hyperprimes.opexpr import DomainSpec, parse_op_expr

Z = DomainSpec("z")
XY = parse_op_expr("x*y", 2, domain=Z)


def test_inverse_pairs():
    assert inverse_check(PLUS, 10).result.value
    div = InversePair(parse_op_expr("x*y", 2), parse_op_expr("x/y", 2))
    assert inverse_check(div, 10).result.value
    rep = inverse_check(exp_log_pair(), 10)
    assert rep.result.value and rep.checked > 0 and rep.skipped > 0


def test_wrong_inverse_is_refuted():
    bad = InversePair(parse_op_expr("x+y", 2), parse_op_expr("x+y", 2))
    rep = inverse_check(bad, 5)
    assert not rep.result.value and rep.result.proven


def q(c, b, m, f=XY):
    return congruent(CongruenceQuery(c, b, m, PLUS, f))


def test_congruence_examples():
    assert q(17, 5, 12).value
    r = q(7776, 6, 5, parse_op_expr("3*x*y", 2, domain=Z))
    assert r.value and r.difference == 7770
    r = q(7, 5, 3)
    assert not r.value and r.result.proven


def test_undefined_difference():
    pair = InversePair(parse_op_expr("x*y", 2), parse_op_expr("x/y", 2))
    r = congruent(CongruenceQuery(7, 2, 3, pair, XY))
    assert not r.value and r.diagnostic


def test_agrees_with_ordinary_congruence():
    # a fixed grid of 10^4 triples
    for c, b, m in product(range(-24, 26), range(-9, 11), range(1, 11)):
        assert q(c, b, m).value == ((c - b) % m == 0), (c, b, m)


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6), st.integers(1, 1000))
def test_agrees_with_ordinary_congruence_large(c, b, m):
    assert q(c, b, m).value == ((c - b) % m == 0)


def test_power_fold_examples():
    assert power_fold(parse_op_expr("2*x*y", 2), 3, 3) == 108
    assert power_fold(parse_op_expr("2*x+3*y", 2), 2, 5) == 322
    assert power_fold(XY, 9, 1) == 9
    with pytest.raises(ValueError):
        power_fold(XY, 9, 0)


def test_closed_forms_on_grid():
    for k, a, p in product(range(1, 11), range(1, 11), range(1, 13)):
        assert power_fold(kxy_op(k), a, p) == kxy_closed_form(k, a, p)
    for u, v, k, p in product(range(-4, 5), range(1, 6), range(1, 8), range(1, 10)):
        assert power_fold(linear_op(u, v), k, p) == linear_closed_form(u, v, k, p)


def test_fermat_kxy():
    r = fermat_kxy_check(3, 2, 5)
    assert r.holds and r.via_congruence and r.via_closed_form
    with pytest.raises(ValueError):
        fermat_kxy_check(5, 2, 5)
    with pytest.raises(ValueError):
        fermat_kxy_check(2, 2, 9)


def test_fermat_linear():
    assert fermat_linear_check(2, 3, 1, 2, 5).fold == 322
    assert fermat_linear_check(0, 1, 0, 4, 7).holds
    assert fermat_linear_check(4, 3, 2, 3, 7).holds
    with pytest.raises(ValueError):
        fermat_linear_check(3, 3, 1, 2, 5)
    with pytest.raises(ValueError):
        fermat_linear_check(2, 1, 0, 2, 5)
    with pytest.raises(ValueError):
        fermat_linear_check(2, 5, 0, 2, 5)


primes = st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31])


@given(st.integers(1, 40), st.integers(1, 40), primes)
def test_fermat_kxy_property(k, a, p):
    if k % p:
        assert fermat_kxy_check(k, a, p).holds


@given(st.integers(-5, 5), st.integers(2, 9), st.integers(1, 20), primes)
def test_fermat_linear_property(h, v, k, p):
    if v % p:
        assert fermat_linear_check(h * (v - 1), v, h, k, p).holds
