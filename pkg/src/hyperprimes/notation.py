"""Hyperoperation formulas: parenthesised trees and superscript sequences.

A flat form ``x o2^1 x o2^0 x o2^2 x`` lists operands and operators; the
superscript on each operator gives its application order (smallest first,
ties left to right).  ``flatten`` and ``structure`` convert between the
two representations; ``parse_hyper`` / ``print_hyper`` handle the text.

Text syntax::

    chain   := item (op item)*
    op      := 'o' LEVEL ['^' INT] | 'o[' LEVEL ']' ['^' INT]
    item    := leaf | '(' chain ')' | count cop operand
    count   := INT | '(' INT ')'
    cop     := op-head '^' ( '[' INT (',' INT)* ']' | '[' ']' | '->' | '<-' )
    operand := leaf | '(' chain ')'

An operator without superscript is applied after everything else in its
parenthesised group and gets ``1 + max`` of the superscripts there; a group
may contain at most one such operator.  ``(n) oI^[S] x`` expands to ``n``
copies of ``x`` joined by level ``I-1`` operators carrying ``S``; ``->`` is
``[0, 1, ..., n-2]`` and ``<-`` its reverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

ARROW_RIGHT = "->"
ARROW_LEFT = "<-"


class HyperSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class AmbiguousForm(ValueError):
    """Equal superscripts whose application order changes the tree."""


@dataclass(frozen=True)
class Leaf:
    symbol: Union[str, int]


@dataclass(frozen=True)
class Apply:
    level: int
    left: "HyperFormula"
    right: "HyperFormula"

    def __post_init__(self):
        if self.level < 0:
            raise ValueError("levels are non-negative")


HyperFormula = Union[Leaf, Apply]


@dataclass(frozen=True)
class FlatForm:
    operands: tuple
    levels: tuple[int, ...]
    supers: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "operands", tuple(self.operands))
        object.__setattr__(self, "levels", tuple(self.levels))
        object.__setattr__(self, "supers", tuple(self.supers))
        if not self.operands:
            raise ValueError("a flat form needs at least one operand")
        if not (len(self.levels) == len(self.supers) == len(self.operands) - 1):
            raise ValueError("levels and superscripts must number one fewer than operands")
        if any(s < 0 for s in self.supers) or any(lv < 0 for lv in self.levels):
            raise ValueError("levels and superscripts are natural numbers")


def resolve_order(order, n: int) -> tuple[int, ...]:
    """Superscript sequence for ``n`` operands from an arrow or explicit list."""
    if order == ARROW_RIGHT:
        return tuple(range(n - 1))
    if order == ARROW_LEFT:
        return tuple(range(n - 2, -1, -1))
    seq = tuple(int(s) for s in order)
    if len(seq) != n - 1:
        raise ValueError(f"order needs {n - 1} superscripts for {n} operands, got {len(seq)}")
    return seq


def leaves(t: HyperFormula) -> list:
    if isinstance(t, Leaf):
        return [t.symbol]
    return leaves(t.left) + leaves(t.right)


def flatten(formula: HyperFormula) -> FlatForm:
    """Superscript form of a tree; each join gets one more than the largest
    superscript already present on either side (0 for two bare operands)."""
    if isinstance(formula, Leaf):
        return FlatForm((formula.symbol,), (), ())
    left, right = flatten(formula.left), flatten(formula.right)
    present = left.supers + right.supers
    top = max(present) + 1 if present else 0
    return FlatForm(left.operands + right.operands,
                    left.levels + (formula.level,) + right.levels,
                    left.supers + (top,) + right.supers)


def _build(flat: FlatForm, reverse_ties: bool) -> HyperFormula:
    items: list = [Leaf(s) for s in flat.operands]
    ops = list(zip(flat.levels, flat.supers))
    while ops:
        low = min(s for _, s in ops)
        ties = [k for k, (_, s) in enumerate(ops) if s == low]
        k = ties[-1] if reverse_ties else ties[0]
        level, _ = ops.pop(k)
        right = items.pop(k + 1)
        items[k] = Apply(level, items[k], right)
    return items[0]


def structure(flat: FlatForm) -> HyperFormula:
    """Tree for a flat form: ascending superscripts, ties left to right.

    Raises :class:`AmbiguousForm` when breaking ties right to left would give
    a different tree.
    """
    tree = _build(flat, reverse_ties=False)
    if len(set(flat.supers)) != len(flat.supers) and _build(flat, reverse_ties=True) != tree:
        raise AmbiguousForm(f"equal superscripts in {list(flat.supers)} overlap; add distinct superscripts")
    return tree


def canonical(flat: FlatForm) -> FlatForm:
    return flatten(structure(flat))


# ---------------------------------------------------------------------------
# Text

def _format_leaf(symbol) -> str:
    return str(symbol)


def print_hyper(obj: Union[FlatForm, HyperFormula]) -> str:
    """Flat forms print as ``a oI^s b ...``; trees fully parenthesised."""
    if isinstance(obj, FlatForm):
        parts = [_format_leaf(obj.operands[0])]
        for level, sup, operand in zip(obj.levels, obj.supers, obj.operands[1:]):
            parts.append(f"o{level}^{sup}")
            parts.append(_format_leaf(operand))
        return " ".join(parts)

    def tree(t: HyperFormula, top: bool) -> str:
        if isinstance(t, Leaf):
            return _format_leaf(t.symbol)
        body = f"{tree(t.left, False)} o{t.level} {tree(t.right, False)}"
        return body if top else f"({body})"

    return tree(obj, True)


_HTOKEN = re.compile(r"""
    \s*(?:
      (?P<op>o(?:\[(?P<lb>\d+)\]|(?P<ld>\d+)))
    | (?P<arrow>->|<-)
    | (?P<int>\d+)
    | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
    | (?P<punct>[()\[\],^])
    )""", re.VERBOSE)


def _hyper_tokens(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    text_len = len(text)
    while pos < text_len:
        if text[pos:].strip() == "":
            break
        m = _HTOKEN.match(text, pos)
        if m is None:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise HyperSyntaxError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastgroup) if m.lastgroup else pos
        if m.group("op"):
            level = int(m.group("lb") or m.group("ld"))
            tokens.append(("op", level, start))
        elif m.group("arrow"):
            tokens.append(("arrow", m.group("arrow"), start))
        elif m.group("int"):
            tokens.append(("int", int(m.group("int")), start))
        elif m.group("name"):
            name = m.group("name")
            if name == "o":
                raise HyperSyntaxError("operator needs a level, e.g. o2", start)
            tokens.append(("name", name, start))
        else:
            tokens.append((m.group("punct"), m.group("punct"), start))
        pos = m.end()
    tokens.append(("end", None, text_len))
    return tokens


@dataclass
class _Op:
    level: int
    sup: int | None
    pos: int


class _HyperParser:
    def __init__(self, text: str):
        self.tokens = _hyper_tokens(text)
        self.i = 0

    @property
    def kind(self) -> str:
        return self.tokens[self.i][0]

    def peek(self, k: int = 1) -> str:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)][0]

    def take(self, kind: str | None = None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise HyperSyntaxError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> FlatForm:
        flat = self.chain()
        self.take("end")
        return flat

    def chain(self) -> FlatForm:
        start = self.tokens[self.i][2]
        items = [self.item()]
        ops: list[_Op] = []
        while self.kind == "op":
            ops.append(self.plain_op())
            items.append(self.item())
        operands: list = []
        levels: list[int] = []
        supers: list[int | None] = []
        for k, item in enumerate(items):
            if k:
                levels.append(ops[k - 1].level)
                supers.append(ops[k - 1].sup)
            operands.extend(item.operands)
            levels.extend(item.levels)
            supers.extend(item.supers)
        missing = [k for k, s in enumerate(supers) if s is None]
        if len(missing) > 1:
            raise HyperSyntaxError("more than one operator without superscript in a group; "
                                   "add parentheses or superscripts", start)
        if missing:
            present = [s for s in supers if s is not None]
            supers[missing[0]] = max(present) + 1 if present else 0
        return FlatForm(tuple(operands), tuple(levels), tuple(supers))

    def plain_op(self) -> _Op:
        _, level, pos = self.take("op")
        sup = None
        if self.kind == "^":
            if self.peek() in ("[", "arrow"):
                raise HyperSyntaxError("sequence superscript needs a count on its left", pos)
            self.take("^")
            sup = self.take("int")[1]
        return _Op(level, sup, pos)

    def item(self) -> FlatForm:
        # counted form: INT or (INT) followed by an operator with a sequence superscript
        if self.kind == "int" and self._counted_after(self.i + 1):
            count = self.take("int")[1]
            return self.counted(count)
        if self.kind == "(" and self.peek() == "int" and self.peek(2) == ")" \
                and self._counted_after(self.i + 3):
            self.take("(")
            count = self.take("int")[1]
            self.take(")")
            return self.counted(count)
        return self.operand()

    def _counted_after(self, j: int) -> bool:
        toks = self.tokens
        return (j + 2 < len(toks) and toks[j][0] == "op" and toks[j + 1][0] == "^"
                and toks[j + 2][0] in ("[", "arrow"))

    def counted(self, count: int) -> FlatForm:
        _, level, pos = self.take("op")
        if level < 1:
            raise HyperSyntaxError("counted forms need level >= 1", pos)
        if count < 1:
            raise HyperSyntaxError("count must be at least 1", pos)
        self.take("^")
        if self.kind == "arrow":
            seq = resolve_order(self.take()[1], count)
        else:
            self.take("[")
            seq_list = []
            if self.kind != "]":
                seq_list.append(self.take("int")[1])
                while self.kind == ",":
                    self.take(",")
                    seq_list.append(self.take("int")[1])
            self.take("]")
            try:
                seq = resolve_order(seq_list, count)
            except ValueError as exc:
                raise HyperSyntaxError(str(exc), pos) from None
        base = self.operand()
        shift = max(base.supers) + 1 if base.supers else 0
        operands: list = []
        levels: list[int] = []
        supers: list[int] = []
        for k in range(count):
            if k:
                levels.append(level - 1)
                supers.append(seq[k - 1] + shift)
            operands.extend(base.operands)
            levels.extend(base.levels)
            supers.extend(base.supers)
        return FlatForm(tuple(operands), tuple(levels), tuple(supers))

    def operand(self) -> FlatForm:
        kind, value, pos = self.tokens[self.i]
        if kind == "(":
            self.take("(")
            inner = self.chain()
            self.take(")")
            return inner
        if kind in ("int", "name"):
            self.take()
            return FlatForm((value,), (), ())
        raise HyperSyntaxError(f"unexpected {value!r}" if kind != "end" else "unexpected end of input", pos)


def parse_hyper(text: str) -> FlatForm:
    """Parse a formula in flat, parenthesised or counted notation."""
    return _HyperParser(text).parse()


def parse_formula(text: str) -> HyperFormula:
    return structure(parse_hyper(text))
