import pytest
from hypothesis import given, strategies as st

from hyperprimes.acceptance import generated_trees
from hyperprimes.notation import (AmbiguousForm, Apply, FlatForm, HyperSyntaxError, Leaf, canonical, flatten,
                                  parse_formula, parse_hyper, print_hyper, resolve_order, structure)

x = Leaf("x")


def test_left_nested_chain():
    t = Apply(2, Apply(2, Apply(2, x, x), x), x)
    assert flatten(t).supers == (0, 1, 2)
    assert structure(FlatForm(("x",) * 4, (2, 2, 2), (0, 1, 2))) == t


def test_mixed_example():
    flat = parse_hyper("x o2^1 x o2^0 x o2^5 y o2^4 z")
    assert flat.supers == (1, 0, 5, 4)
    tree = structure(flat)
    assert print_hyper(tree) == "(x o2 (x o2 x)) o2 (y o2 z)"
    assert canonical(flat).supers == (1, 0, 2, 0)


def test_equal_superscripts_that_do_not_interact():
    flat = FlatForm(("x",) * 5, (2,) * 4, (1, 0, 2, 0))
    assert print_hyper(structure(flat)) == "(x o2 (x o2 x)) o2 (x o2 x)"


def test_ambiguous_ties_are_rejected():
    with pytest.raises(AmbiguousForm):
        structure(FlatForm(("x",) * 3, (2, 2), (0, 0)))


def test_leaf():
    assert flatten(x) == FlatForm(("x",), (), ())
    assert structure(FlatForm(("x",), (), ())) == x


def test_arrows():
    assert resolve_order("->", 4) == (0, 1, 2)
    assert resolve_order("<-", 4) == (2, 1, 0)
    assert parse_hyper("4 o3^-> x").supers == (0, 1, 2)
    assert parse_hyper("4 o3^<- x").supers == (2, 1, 0)
    with pytest.raises(ValueError):
        resolve_order([0, 1], 4)


def test_parenthesised_input():
    assert parse_hyper("(x o2 x) o2 x").supers == (0, 1)
    assert parse_formula("x o2 (x o2 x)") == Apply(2, x, Apply(2, x, x))


@pytest.mark.parametrize("text", ["x o2^", "x o2^0", "(x o2 x", "x ? x", "x o2 x o2 x"])
def test_syntax_errors(text):
    with pytest.raises(HyperSyntaxError):
        parse_hyper(text)


def test_generated_trees_round_trip():
    trees = generated_trees(1000)
    assert len(set(trees)) == 1000
    assert all(structure(flatten(t)) == t for t in trees)


def trees(symbols=st.sampled_from(["x", "y", "z", 2, 3])):
    return st.recursive(symbols.map(Leaf),
                        lambda kids: st.builds(Apply, st.integers(0, 5), kids, kids), max_leaves=10)


@given(trees())
def test_structure_inverts_flatten(t):
    assert structure(flatten(t)) == t


@given(trees())
def test_printed_forms_reparse(t):
    flat = flatten(t)
    assert parse_hyper(print_hyper(flat)) == flat
    assert parse_formula(print_hyper(t)) == t
