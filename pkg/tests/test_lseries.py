from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperprimes.lseries import (CombElement, assoc_comm_probe, coeff_table, defect_partial, element_sum, gen_F,
                                 gen_TAC, lseries_partial, zeta_partial)
from hyperprimes.opexpr import parse_op_expr

XY = parse_op_expr("x*y", 2)


def test_sample_t():
    three, five = CombElement.leaf(3), CombElement.leaf(5)
    t = [three, five, CombElement((three, five), 15, 2), CombElement((five, three), 15, 2)]
    assert coeff_table(t, 15).counts == {3: 1, 5: 1, 15: 2}
    assert element_sum(t, 2) == Fraction(1, 9) + Fraction(1, 25) + Fraction(2, 225)


def test_xy_tac_gives_zeta():
    table = coeff_table(gen_TAC(XY, 2000), 2000, "TAC")
    assert all(table[i] == 1 for i in range(1, 2001))
    assert lseries_partial(table, 2).value == zeta_partial(2, 2000).value
    assert defect_partial(table, 3).value == 0


def test_tac_elements_are_sorted_multisets():
    elems = {e.value: str(e) for e in gen_TAC(XY, 12)}
    assert elems[4] == "(2 o 2)"
    assert elems[12] == "((2 o 2) o 3)"


def test_gen_f_counts_orders():
    counts = coeff_table(gen_F(XY, 30, 3), 30).counts
    assert counts[6] == 2  # 2*3 and 3*2
    assert counts[12] == 6  # (2,2,3) in three orders and two bracketings


def test_sum_operation():
    add = parse_op_expr("x+y", 2)
    assert len(gen_TAC(add, 300)) == 300
    sizes = [e.size for e in gen_F(add, 3, 3)]
    assert max(sizes) == 3


def test_non_ac_operation_is_rejected():
    f = parse_op_expr("x+2*y", 2)
    rep = assoc_comm_probe(f, 6)
    assert not rep.commutative.value and rep.commutative_counterexample == (1, 2)
    with pytest.raises(ValueError):
        gen_TAC(f, 50)


def test_float_evaluation():
    table = coeff_table(gen_TAC(XY, 200), 200)
    p = lseries_partial(table, 2.5)
    assert not p.exact
    assert abs(float(p.value) - float(zeta_partial(2.5, 200).value)) < 1e-30
    with pytest.raises(ValueError):
        lseries_partial(table, 1)


@given(st.integers(2, 4), st.integers(1, 60))
def test_zeta_partial_exact(s, N):
    assert zeta_partial(s, N).value == sum(Fraction(1, i ** s) for i in range(1, N + 1))
