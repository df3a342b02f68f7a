"""Exact evaluation of hyperoperations in superscript notation.

Levels: 0 is addition, 1 multiplication, 2 exponentiation in the suffix
convention ``A o2 B = B^A`` (so ``n o2 x = x^n``), and ``A oI B`` for
``I >= 3`` means ``(A) oI^-> B``: ``A`` copies of ``B`` combined at level
``I-1`` in left-to-right order.  ``0^0 = 1`` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence, Union

from .notation import (ARROW_LEFT, ARROW_RIGHT, Apply, FlatForm, HyperFormula, Leaf,
                       resolve_order, structure)
from .opexpr import DEFAULT_MAX_BITS, TooLarge

Order = Union[str, Sequence[int]]

__all__ = ["ARROW_LEFT", "ARROW_RIGHT", "EvalLimits", "TooLarge", "DistribResult", "apply_level",
           "hyper_eval", "eval_formula", "eval_flat", "zero_tower", "distrib_check", "tower"]


@dataclass(frozen=True)
class EvalLimits:
    max_bits: int = DEFAULT_MAX_BITS
    max_operand_count: int = 4096

    def __post_init__(self):
        if self.max_bits < 1 or self.max_operand_count < 1:
            raise ValueError("limits must be positive")


DEFAULT_LIMITS = EvalLimits()


def _check(value: int, limits: EvalLimits) -> int:
    if value.bit_length() > limits.max_bits:
        raise TooLarge(f"intermediate exceeds {limits.max_bits} bits")
    return value


def _power(base: int, exp: int, limits: EvalLimits) -> int:
    if exp < 0:
        raise ValueError("negative exponent in a hyperoperation")
    if exp == 0 or base == 1:
        return 1
    if base in (0, -1):
        return base if exp % 2 else 1
    # cheap lower bound on the result size before doing the work
    if (abs(base).bit_length() - 1) * exp > limits.max_bits:
        raise TooLarge(f"intermediate exceeds {limits.max_bits} bits")
    return _check(base ** exp, limits)


def apply_level(i: int, a: int, b: int, limits: EvalLimits = DEFAULT_LIMITS) -> int:
    """Binary ``a oI b`` under the suffix convention."""
    if i == 0:
        return _check(a + b, limits)
    if i == 1:
        return _check(a * b, limits)
    if i == 2:
        return _power(b, a, limits)
    if a < 1:
        raise ValueError(f"left operand of o{i} is a count and must be positive")
    return hyper_eval(a, i, ARROW_RIGHT, b, limits)


def hyper_eval(n: int, i: int, order: Order, x: int, limits: EvalLimits = DEFAULT_LIMITS) -> int:
    """``(n) oI^[S] x``: ``n`` copies of ``x`` combined at level ``i-1`` in
    the order given by ``S`` (an arrow or an explicit superscript list).

    Levels 1 and 2 give ``n*x`` and ``x^n`` whatever the order, since the
    level below is associative.  Raises :class:`TooLarge` past the limits.
    """
    if n < 1:
        raise ValueError("n counts operands and must be at least 1")
    if i < 1:
        raise ValueError("level must be at least 1: (n) o0 x would combine copies below addition")
    if n > limits.max_operand_count:
        raise TooLarge(f"{n} operands exceed the limit of {limits.max_operand_count}")
    supers = resolve_order(order, n)
    if n == 1:
        return x
    if i == 1:
        return _check(n * x, limits)
    if i == 2:
        return _power(x, n, limits)
    return _hyper_cached(n, i, supers, x, limits)


@lru_cache(maxsize=4096)
def _hyper_cached(n: int, i: int, supers: tuple[int, ...], x: int, limits: EvalLimits) -> int:
    flat = FlatForm((x,) * n, (i - 1,) * (n - 1), supers)
    return eval_formula(structure(flat), {}, limits)


def eval_formula(formula: HyperFormula, binding: Mapping[str, int] | None = None,
                 limits: EvalLimits = DEFAULT_LIMITS) -> int:
    """Bottom-up value of a tree; string leaves are looked up in ``binding``."""
    binding = binding or {}
    if isinstance(formula, Leaf):
        sym = formula.symbol
        if isinstance(sym, int):
            return sym
        if sym not in binding:
            raise KeyError(f"unbound leaf {sym!r}")
        return binding[sym]
    # iterative over the left spine keeps deep left-nested towers off the stack
    spine: list[Apply] = []
    node: HyperFormula = formula
    while isinstance(node, Apply):
        spine.append(node)
        node = node.left
    acc = eval_formula(node, binding, limits)
    for ap in reversed(spine):
        acc = apply_level(ap.level, acc, eval_formula(ap.right, binding, limits), limits)
    return acc


def eval_flat(flat: FlatForm, binding: Mapping[str, int] | None = None,
              limits: EvalLimits = DEFAULT_LIMITS) -> int:
    return eval_formula(structure(flat), binding, limits)


def tower(x: int, height: int, limits: EvalLimits = DEFAULT_LIMITS) -> int:
    """``x^(x^(...^x))`` with ``height`` copies, computed top-down."""
    acc = x
    for _ in range(height - 1):
        acc = _power(x, acc, limits)
    return acc


def zero_tower(n: int, limits: EvalLimits = DEFAULT_LIMITS) -> int:
    """``(n) o3^-> 0`` evaluated literally with ``0^0 = 1``."""
    return hyper_eval(n, 3, ARROW_RIGHT, 0, limits)


@dataclass(frozen=True)
class DistribResult:
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def distrib_form(n: int, i: int) -> FlatForm:
    """Right-hand side ``(n) oI^Even x o(I-1)^0 (n) oI^Odd y`` as one flat form."""
    even = [2 * k for k in range(n - 1, 0, -1)]
    odd = [2 * k + 1 for k in range(n - 1)]
    return FlatForm(("x",) * n + ("y",) * n, (i - 1,) * (2 * n - 1), even + [0] + odd)


def distrib_check(n: int, i: int, x: int, y: int, limits: EvalLimits = DEFAULT_LIMITS) -> DistribResult:
    """Both sides of the higher distributivity identity.

    ``lhs = (n) oI^-> (x o(I-1) y)``; ``rhs`` evaluates :func:`distrib_form`.
    """
    if i not in (1, 2, 3):
        raise ValueError("distributivity is stated for levels 1, 2 and 3")
    if min(n, x, y) < 1:
        raise ValueError("n, x and y must be positive")
    lhs = hyper_eval(n, i, ARROW_RIGHT, apply_level(i - 1, x, y, limits), limits)
    rhs = eval_flat(distrib_form(n, i), {"x": x, "y": y}, limits)
    return DistribResult(lhs, rhs)
