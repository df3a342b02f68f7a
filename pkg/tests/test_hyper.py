import pytest
from hypothesis import given, strategies as st

from hyperprimes.hyper import (EvalLimits, TooLarge, apply_level, distrib_check, distrib_form, eval_flat,
                               hyper_eval, tower, zero_tower)
from hyperprimes.notation import parse_hyper


def test_tower_values():
    assert hyper_eval(4, 3, "<-", 2) == 256
    assert hyper_eval(4, 3, "->", 2) == 2 ** 16
    assert hyper_eval(2, 3, "->", 3) == 27
    assert hyper_eval(1, 5, "->", 7) == 7


def test_low_levels():
    assert hyper_eval(5, 1, "->", 3) == 15
    assert hyper_eval(3, 2, "->", 3) == 27
    assert apply_level(0, 2, 3) == 5
    assert apply_level(2, 3, 2) == 8  # a o2 b = b^a


def test_explicit_superscripts():
    assert hyper_eval(3, 3, [1, 0], 2) == eval_flat(parse_hyper("x o2^1 x o2^0 x"), {"x": 2})
    assert eval_flat(parse_hyper("x o2 (x o2 x)"), {"x": 2}) == 16


def test_invalid_arguments():
    with pytest.raises(ValueError):
        hyper_eval(0, 3, "->", 2)
    with pytest.raises(ValueError):
        hyper_eval(3, 0, "->", 2)


def test_limits():
    with pytest.raises(TooLarge):
        hyper_eval(5, 3, "->", 3)
    with pytest.raises(TooLarge):
        hyper_eval(3, 3, "->", 10, EvalLimits(max_bits=64))


def test_zero_towers():
    assert zero_tower(1) == 0
    assert zero_tower(3) == 0
    assert zero_tower(4) == 1
    assert [zero_tower(n) for n in range(1, 21)] == [1 - n % 2 for n in range(1, 21)]


def test_distrib_form_shape():
    assert distrib_form(3, 3).supers == (4, 2, 0, 1, 3)


def test_worked_distributivity_example():
    r = distrib_check(3, 3, 2, 2)
    assert r.equal and r.lhs == 2 ** 512


@pytest.mark.parametrize("i", [1, 2])
def test_distributivity_low_levels(i):
    for n in range(1, 7):
        for x in range(1, 7):
            for y in range(1, 7):
                assert distrib_check(n, i, x, y).equal


def test_distributivity_level_three_small():
    for n in range(1, 4):
        for x in (1, 2):
            for y in (1, 2):
                assert distrib_check(n, 3, x, y).equal


def test_tower_matches_right_arrow():
    assert tower(2, 4) == hyper_eval(4, 3, "->", 2)


@given(st.integers(1, 4), st.integers(1, 6))
def test_right_arrow_level_three_is_a_power_tower(n, x):
    try:
        expected = tower(x, n, EvalLimits(max_bits=1 << 14))
    except TooLarge:
        return
    assert hyper_eval(n, 3, "->", x, EvalLimits(max_bits=1 << 14)) == expected


@given(st.integers(1, 6), st.integers(1, 6))
def test_left_arrow_level_three_collapses(n, x):
    # x o2 (x o2 (... o2 x)) = x^(x^(n-1))
    if n * x > 40:
        return
    assert hyper_eval(n, 3, "<-", x) == x ** (x ** (n - 1))
