import pytest
from hypothesis import given, settings, strategies as st
from sympy import isprime

from hyperprimes.genprime import (CertBounds, Deep, NotFound, TopLevel, classify, is_left_unit, is_left_zero,
                                  is_nary_unit, is_right_unit, is_right_zero, parse_semantics, prime_set,
                                  sieve, unit_witness)
from hyperprimes.opexpr import DomainSpec, parse_op_expr

Z = DomainSpec("z")
B = CertBounds((-40, 40), 40)


def op(text, domain=None, **params):
    return parse_op_expr(text, 2, params, domain)


def test_units():
    r = is_left_unit(op("x*y"), 1, CertBounds((1, 40), 40))
    assert r.value and r.proven
    r = is_left_unit(op("x*y-3", Z), 1, B)
    assert r.value and r.proven
    r = is_left_unit(op("x-y+8"), 8, CertBounds((1, 40), 40))
    assert not r.value and r.proven
    assert not is_right_unit(op("x*y"), 2, CertBounds((1, 40), 40)).value


def test_unit_witnesses():
    assert unit_witness(op("x*y-3", Z), 1, 2, B) == (5,)
    assert unit_witness(op("x*y"), 1, 42, CertBounds((1, 50), 50)) == (42,)
    w = unit_witness(op("x*abs(y)", Z), 1, 5, B)
    assert w in ((5,), (-5,))
    with pytest.raises(NotFound):
        unit_witness(op("x+y"), 3, 2, CertBounds((1, 40), 40))


def test_zeros():
    assert is_left_zero(op("x*y", DomainSpec("n0")), 0, CertBounds((0, 30), 30)).value
    assert not is_left_zero(op("x+y", DomainSpec("n0")), 0, CertBounds((0, 30), 30)).value
    assert is_right_zero(op("x*y", DomainSpec("n0")), 0, CertBounds((0, 30), 30)).value


def test_classify_under_both_semantics():
    f = op("x*y-3", Z)
    assert classify(f, 16).verdict == "prime"
    deep = classify(f, 16, semantics=Deep(2))
    assert deep.verdict == "composite"
    assert str(deep.witness) == "f(19, f(2, 2))"


def test_twelve_under_x_minus_y_plus_8():
    # 12 reaches every k through f(k + 4, 12), so it is a right-unit; it is
    # still recorded as a combination of non-units
    c = classify(op("x-y+8"), 12)
    assert c.verdict == "unit" and c.right.value
    assert c.witness is not None


def test_xy_power_sieve():
    t = sieve(op("x^y"), (1, 28))
    assert t.primes == [2, 3, 5, 6, 7, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22, 23, 24, 26, 28]
    assert t.unit_elements == [1]
    assert "right-unit" in t.notes()[0]


def test_sum_sieve():
    assert sieve(op("x+y"), (1, 30)).primes == [1]


def test_multiples_over_integers():
    t = sieve(parse_op_expr("k*y", 2, {"k": 3}, Z), (-30, 30))
    assert t.composites == [n for n in range(-30, 31) if n % 3 == 0]


def squares_oracle(n):
    return not any(a * a + b * b == n for a in range(1, n + 1) for b in range(1, n + 1))


def test_prime_sets():
    assert prime_set(op("x^2+y^2"), (1, 27)).elements == (1, 3, 4, 6, 7, 9, 11, 12, 14, 15, 16, 19, 21,
                                                          22, 23, 24, 27)
    assert prime_set(op("x*y"), (1, 20)).elements == (2, 3, 5, 7, 11, 13, 17, 19)


def test_squares_against_brute_force():
    t = sieve(op("x^2+y^2"), (1, 300))
    assert t.primes == [n for n in range(1, 301) if squares_oracle(n)]
    assert not t.unknown


def test_usual_primes():
    t = sieve(op("x*y"), (1, 500))
    assert t.primes == [n for n in range(1, 501) if isprime(n)]
    assert t.unit_elements == [1]


def test_finite_domain():
    d = DomainSpec.explicit(range(0, 5))
    f = parse_op_expr("x+y", 2, domain=d)
    r = is_nary_unit(f, 0, 1, CertBounds((0, 4), 4))
    assert r.value and r.proven


def test_constant_operation():
    t = sieve(parse_op_expr("1", 2), (1, 20))
    assert t.composites == [1] and t.primes == list(range(2, 21))


def test_outputs():
    t = sieve(op("x^y"), (1, 10))
    d = t.to_dict()
    assert d["units"] == [1] and d["window"] == [1, 10]
    assert t.to_csv().splitlines()[0] == "n,verdict,witness,certification"


def test_parallel_matches_serial():
    f = op("x^2+y^2")
    a = sieve(f, (1, 400))
    b = sieve(f, (1, 400), jobs=3)
    assert a.to_dict() == b.to_dict()


def test_semantics_parsing():
    assert parse_semantics("top") == TopLevel()
    assert parse_semantics("deep:3") == Deep(3)
    with pytest.raises(ValueError):
        parse_semantics("wide")


ops = st.sampled_from(["x*y", "x^2+y^2", "x+2*y", "x*y+1", "x^y"])


@settings(max_examples=20, deadline=None)
@given(ops, st.integers(1, 60))
def test_enlarging_bounds_is_monotone(text, n):
    f = op(text)
    small = classify(f, n, CertBounds((1, 64), 64)).verdict
    large = classify(f, n, CertBounds((1, 256), 256)).verdict
    if small == "unit":
        assert large == "unit"
    if small == "prime":
        assert large in ("prime", "composite")
    if small == "composite":
        assert large == "composite"
