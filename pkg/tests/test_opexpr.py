import pytest
from hypothesis import given, strategies as st

from hyperprimes.opexpr import (Abs, ArityError, BinOp, Call, DomainSpec, DSLSyntaxError, Int, Neg, Param,
                                TooLarge, UnboundParameter, Undefined, Var, affine_section, eval_op,
                                exact_log, exact_root, format_expr, frobenius_number, guarded_pow,
                                is_monotone, parse_expr, parse_op_expr, parse_range)

Z = DomainSpec("z")


def test_example_operations_evaluate():
    assert eval_op(parse_op_expr("x*y-3", 2, domain=Z), [1, 4]) == 1
    assert eval_op(parse_op_expr("x-y+8", 2), [8, 4]) == 12
    assert eval_op(parse_op_expr("x/y", 2), [3, 2]) is None
    assert eval_op(parse_op_expr("x/y", 2), [6, 2]) == 3


def test_four_ary_and_params():
    op = parse_op_expr("x1^2+x2^2+x3^2+x4^2", 4, domain=DomainSpec("n0"))
    assert op.arity == 4 and op(1, 2, 3, 4) == 30
    assert parse_op_expr("k*x*y", 2, {"k": 3})(2, 5) == 30


def test_leaving_the_domain_is_undefined():
    assert parse_op_expr("x-y", 2)(2, 5) is None
    assert parse_op_expr("x-y", 2, domain=Z)(2, 5) == -3


def test_errors():
    with pytest.raises(UnboundParameter):
        parse_op_expr("k*x", 1)
    with pytest.raises(DSLSyntaxError) as info:
        parse_expr("x+*y")
    assert info.value.position == 2
    with pytest.raises(ArityError):
        parse_op_expr("x+y", 2)(1)
    with pytest.raises(ArityError):
        parse_op_expr("x1+x3", 1)


def test_renumbering_to_declared_arity():
    op = parse_op_expr("z^2", 1)
    assert op.text == "x1^2" and op(5) == 25


def test_guarded_power():
    assert guarded_pow(2, 10) == 1024
    with pytest.raises(TooLarge):
        guarded_pow(2, 1 << 30, 100)


def test_exact_helpers():
    assert exact_root(27, 3) == 3
    assert exact_log(8, 2) == 3
    with pytest.raises(Undefined):
        exact_root(26, 3)
    with pytest.raises(Undefined):
        exact_log(9, 2)


def test_structural_analysis():
    assert affine_section(parse_op_expr("x-y+8", 2), {1: 3}) == (11, {2: -1})
    assert affine_section(parse_op_expr("x^2+y^2", 2), {1: 3}) is None
    assert is_monotone(parse_op_expr("x^2+y^2", 2))
    assert not is_monotone(parse_op_expr("x-y", 2))
    assert frobenius_number([3, 5]) == 7
    assert frobenius_number([1, 4]) == -1
    assert frobenius_number([2, 4]) is None


def test_domains_and_ranges():
    assert parse_range("4..10") == (4, 10)
    assert parse_range("-3..3") == (-3, 3)
    with pytest.raises(ValueError):
        parse_range("10..4")
    d = DomainSpec.parse("z:-3..3")
    assert d.describe() == "z:-3..3" and -7 in d
    assert list(d.candidates(2)) == [0, 1, -1, 2, -2]
    assert 0 not in DomainSpec("n1") and 0 in DomainSpec("n0")


def test_set_domain_from_file(tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("2\n3\n5\n")
    d = DomainSpec.parse(f"set:{f}")
    assert d.elements == (2, 3, 5) and 4 not in d


# random expression trees ------------------------------------------------------

leaf = st.one_of(st.integers(0, 50).map(Int), st.integers(1, 4).map(Var), st.sampled_from(["k", "a"]).map(Param))


def extend(children):
    return st.one_of(
        st.builds(BinOp, st.sampled_from("+-*/^"), children, children),
        st.builds(Neg, children),
        st.builds(Abs, children),
        st.builds(Call, st.sampled_from(["root", "log"]), children, children),
    )


expr_trees = st.recursive(leaf, extend, max_leaves=12)


@given(expr_trees)
def test_print_parse_round_trip(e):
    assert parse_expr(format_expr(e)) == e


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_compiled_matches_python(a, b):
    op = parse_op_expr("x^2 - 3*x*y + abs(y) - 7", 2, domain=Z)
    assert op(a, b) == a * a - 3 * a * b + abs(b) - 7


def test_square_minus_twice():
    # 4 = 4 o 6 under x^2 - 2y
    assert parse_op_expr("x^2-2*y", 2)(4, 6) == 4
