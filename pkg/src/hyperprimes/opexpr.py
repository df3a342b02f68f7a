"""Integer operation DSL: parse, print, compile and evaluate ``f(x1, ..., xn)``.

Grammar (whitespace insignificant)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary | atom_start unary)*     # juxtaposition multiplies
    unary   := '-' unary | power
    power   := atom ('^' unary)?                                   # right associative
    atom    := INT | VAR | PARAM | '(' expr ')'
             | 'abs' '(' expr ')' | 'root' '(' expr ',' expr ')' | 'log' '(' expr ',' expr ')'
    VAR     := 'x' | 'y' | 'z' | 'x' DIGITS                       # x, y, z alias x1, x2, x3

``/`` is exact division, ``root(e, n)`` the exact n-th root and ``log(e, b)``
the exact integer logarithm; all three are partial and yield Undefined when
the result is not an integer.  Exponents must be non-negative.  ``0^0 = 1``.
"""

from __future__ import annotations

import bisect
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from sympy import integer_nthroot

DEFAULT_MAX_BITS = 1 << 20


class DSLSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnboundParameter(ValueError):
    pass


class ArityError(ValueError):
    pass


class TooLarge(ArithmeticError):
    """An intermediate value exceeded the configured bit budget."""


class Undefined(ArithmeticError):
    """Raised inside compiled operations when a partial construct is undefined."""


# ---------------------------------------------------------------------------
# AST

@dataclass(frozen=True)
class Int:
    value: int


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Param:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Abs:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str  # root | log
    arg: "Expr"
    other: "Expr"


Expr = Union[Int, Var, Param, Neg, Abs, BinOp, Call]

_VAR_ALIASES = {"x": 1, "y": 2, "z": 3}
_FUNCS = {"abs": 1, "root": 2, "log": 2}


def variables(expr: Expr) -> set[int]:
    if isinstance(expr, Var):
        return {expr.index}
    return set().union(*(variables(c) for c in _children(expr))) if _children(expr) else set()


def parameters(expr: Expr) -> set[str]:
    if isinstance(expr, Param):
        return {expr.name}
    out: set[str] = set()
    for c in _children(expr):
        out |= parameters(c)
    return out


def _children(expr: Expr) -> tuple:
    if isinstance(expr, (Neg, Abs)):
        return (expr.arg,)
    if isinstance(expr, BinOp):
        return (expr.left, expr.right)
    if isinstance(expr, Call):
        return (expr.arg, expr.other)
    return ()


# ---------------------------------------------------------------------------
# Parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^(),":
                raise DSLSyntaxError(f"unexpected character {ch!r}", start, text)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def kind(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str | None = None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            raise DSLSyntaxError(f"expected {want}, found {tok[1]!r}", tok[2], self.text)
        self.i += 1
        return tok

    def parse(self) -> Expr:
        e = self.expr()
        self.take("end")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.kind in ("+", "-"):
            op = self.take()[0]
            e = BinOp(op, e, self.term())
        return e

    def term(self) -> Expr:
        e = self.unary()
        while True:
            if self.kind in ("*", "/"):
                op = self.take()[0]
                e = BinOp(op, e, self.unary())
            elif self.kind in ("int", "name", "("):
                e = BinOp("*", e, self.unary())
            else:
                return e

    def unary(self) -> Expr:
        if self.kind == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.kind == "^":
            self.take()
            return BinOp("^", base, self.unary())
        return base

    def atom(self) -> Expr:
        kind, value, pos = self.tokens[self.i]
        if kind == "int":
            self.take()
            return Int(value)
        if kind == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        if kind == "name":
            self.take()
            if value in _FUNCS:
                self.take("(")
                first = self.expr()
                if _FUNCS[value] == 1:
                    self.take(")")
                    return Abs(first)
                self.take(",")
                second = self.expr()
                self.take(")")
                return Call(value, first, second)
            if value in _VAR_ALIASES:
                return Var(_VAR_ALIASES[value])
            if len(value) > 1 and set(value) <= set(_VAR_ALIASES):
                # "xy" reads as x*y, as in the usual informal notation
                out: Expr = Var(_VAR_ALIASES[value[0]])
                for ch in value[1:]:
                    out = BinOp("*", out, Var(_VAR_ALIASES[ch]))
                return out
            m = re.fullmatch(r"x(\d+)", value)
            if m:
                index = int(m.group(1))
                if index < 1:
                    raise DSLSyntaxError("variable indices start at 1", pos, self.text)
                return Var(index)
            return Param(value)
        raise DSLSyntaxError(f"unexpected {value!r}" if kind != "end" else "unexpected end of input",
                             pos, self.text)


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Printer (minimal parentheses, re-parses to the same tree)

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4, "atom": 5}


def _prec(e: Expr) -> int:
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return _PREC["neg"]
    if isinstance(e, Int) and e.value < 0:
        return _PREC["neg"]
    return _PREC["atom"]


def format_expr(e: Expr) -> str:
    if isinstance(e, Int):
        return str(e.value) if e.value >= 0 else f"-{-e.value}"
    if isinstance(e, Var):
        return f"x{e.index}"
    if isinstance(e, Param):
        return e.name
    if isinstance(e, Neg):
        inner = format_expr(e.arg)
        return f"-{inner}" if _prec(e.arg) >= _PREC["neg"] else f"-({inner})"
    if isinstance(e, Abs):
        return f"abs({format_expr(e.arg)})"
    if isinstance(e, Call):
        return f"{e.name}({format_expr(e.arg)}, {format_expr(e.other)})"
    p = _PREC[e.op]
    left, right = format_expr(e.left), format_expr(e.right)
    if e.op == "^":
        if _prec(e.left) <= p:
            left = f"({left})"
        if _prec(e.right) < _PREC["neg"]:
            right = f"({right})"
        return f"{left}^{right}"
    if _prec(e.left) < p:
        left = f"({left})"
    # left-associative: an equal-precedence right operand needs brackets
    if _prec(e.right) <= p:
        right = f"({right})"
    return f"{left} {e.op} {right}"


# ---------------------------------------------------------------------------
# Runtime helpers shared by compiled operations

def guarded_pow(base: int, exp: int, max_bits: int = DEFAULT_MAX_BITS) -> int:
    if exp < 0:
        if base == 1:
            return 1
        if base == -1:
            return -1 if exp % 2 else 1
        raise Undefined("negative exponent")
    if base in (0, 1) or exp <= 1:
        return base ** exp
    if base == -1:
        return -1 if exp % 2 else 1
    if (abs(base).bit_length() - 1) * exp >= max_bits:
        raise TooLarge(f"power exceeds {max_bits} bits")
    result = base ** exp
    if result.bit_length() > max_bits:
        raise TooLarge(f"power exceeds {max_bits} bits")
    return result


def exact_div(a: int, b: int) -> int:
    if b == 0:
        raise Undefined("division by zero")
    q, r = divmod(a, b)
    if r:
        raise Undefined("inexact quotient")
    return q


def exact_root(a: int, n: int) -> int:
    if n < 1:
        raise Undefined("root degree must be positive")
    if a < 0:
        if n % 2 == 0:
            raise Undefined("even root of a negative number")
        return -exact_root(-a, n)
    r, exact = integer_nthroot(a, n)
    if not exact:
        raise Undefined("inexact root")
    return int(r)


def exact_log(a: int, b: int) -> int:
    if b < 2 or a < 1:
        raise Undefined("logarithm outside its domain")
    k = 0
    while a % b == 0:
        a //= b
        k += 1
    if a != 1:
        raise Undefined("inexact logarithm")
    return k


def _source(e: Expr, params: Mapping[str, int]) -> str:
    if isinstance(e, Int):
        return f"({e.value})"
    if isinstance(e, Var):
        return f"x{e.index}"
    if isinstance(e, Param):
        return f"({params[e.name]})"
    if isinstance(e, Neg):
        return f"(-{_source(e.arg, params)})"
    if isinstance(e, Abs):
        return f"abs({_source(e.arg, params)})"
    if isinstance(e, Call):
        fn = "_root" if e.name == "root" else "_log"
        return f"{fn}({_source(e.arg, params)}, {_source(e.other, params)})"
    a, b = _source(e.left, params), _source(e.right, params)
    if e.op == "^":
        if isinstance(e.right, Int) and 0 <= e.right.value <= 8:
            # fixed small degrees cannot run away; skip the guard
            return f"({a} ** {e.right.value})"
        return f"_pow({a}, {b}, _mb)"
    if e.op == "/":
        return f"_div({a}, {b})"
    return f"({a} {e.op} {b})"


def compile_expr(expr: Expr, arity: int, params: Mapping[str, int], max_bits: int = DEFAULT_MAX_BITS):
    """Return a plain Python function of ``arity`` integers.

    The function raises :class:`Undefined` for partial constructs and
    :class:`TooLarge` when a power would exceed ``max_bits``.
    """
    names = ", ".join(f"x{j}" for j in range(1, arity + 1))
    src = f"lambda {names}: {_source(expr, params)}"
    env = {"__builtins__": {}, "abs": abs, "_pow": guarded_pow, "_div": exact_div,
           "_root": exact_root, "_log": exact_log, "_mb": max_bits}
    return eval(src, env)  # noqa: S307 - source is generated from the AST above


# ---------------------------------------------------------------------------
# Domains and operation specs

@dataclass(frozen=True)
class DomainSpec:
    """Carrier set of an operation.

    ``kind`` is ``"n1"`` (positive integers), ``"n0"`` (non-negative
    integers), ``"z"`` (all integers; ``window`` is only the default search
    range) or ``"set"`` (a finite explicit set, stored sorted).
    """

    kind: str = "n1"
    elements: tuple[int, ...] = ()
    window: tuple[int, int] | None = None

    def __post_init__(self):
        if self.kind not in ("n1", "n0", "z", "set"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.kind == "set":
            if any(b <= a for a, b in zip(self.elements, self.elements[1:])):
                raise ValueError("explicit domain must be strictly increasing")

    @classmethod
    def explicit(cls, values: Iterable[int]) -> "DomainSpec":
        return cls("set", tuple(sorted(set(values))))

    @classmethod
    def parse(cls, text: str) -> "DomainSpec":
        text = text.strip()
        if text in ("n1", "N", "n"):
            return cls("n1")
        if text in ("n0", "N0"):
            return cls("n0")
        if text == "z":
            return cls("z")
        if text.startswith("z:"):
            lo, hi = parse_range(text[2:])
            return cls("z", window=(lo, hi))
        if text.startswith("set:"):
            with open(text[4:]) as fh:
                values = [int(line) for line in fh if line.strip()]
            return cls("set", tuple(values))
        raise ValueError(f"cannot parse domain {text!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "set"

    @property
    def minimum(self) -> int | None:
        if self.kind == "n1":
            return 1
        if self.kind == "n0":
            return 0
        if self.kind == "set":
            return self.elements[0] if self.elements else None
        return None

    @cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __contains__(self, value: int) -> bool:
        if self.kind == "n1":
            return value >= 1
        if self.kind == "n0":
            return value >= 0
        if self.kind == "z":
            return True
        return value in self._members

    def candidates(self, radius: int) -> Sequence[int]:
        """Search candidates: the whole set when finite, else ``|v| <= radius``."""
        if self.kind == "n1":
            return range(1, radius + 1)
        if self.kind == "n0":
            return range(0, radius + 1)
        if self.kind == "z":
            return sorted(range(-radius, radius + 1), key=lambda v: (abs(v), v < 0))
        return self.elements

    def within(self, lo: int, hi: int) -> Sequence[int]:
        if self.kind == "set":
            return self.elements[bisect.bisect_left(self.elements, lo):bisect.bisect_right(self.elements, hi)]
        start = lo if self.minimum is None else max(lo, self.minimum)
        return range(start, hi + 1)

    def describe(self) -> str:
        if self.kind == "set":
            return f"set[{len(self.elements)}]"
        if self.kind == "z" and self.window:
            return f"z:{self.window[0]}..{self.window[1]}"
        return self.kind

    def __getstate__(self):
        state = dict(self.__dict__)
        state.pop("_members", None)
        return state


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"expected a range a..b, got {text!r}")
    lo_i, hi_i = int(lo), int(hi)
    if hi_i < lo_i:
        raise ValueError(f"empty range {text!r}")
    return lo_i, hi_i


@dataclass(frozen=True)
class OpSpec:
    name: str
    arity: int
    body: Expr
    params: Mapping[str, int] = field(default_factory=dict)
    domain: DomainSpec = field(default_factory=DomainSpec)
    max_bits: int = DEFAULT_MAX_BITS

    def __post_init__(self):
        if self.arity < 1:
            raise ArityError("arity must be positive")
        used = variables(self.body)
        if used and max(used) > self.arity:
            raise ArityError(f"variable x{max(used)} exceeds arity {self.arity}")
        missing = parameters(self.body) - set(self.params)
        if missing:
            raise UnboundParameter(f"unbound parameter(s): {', '.join(sorted(missing))}")
        object.__setattr__(self, "params", dict(self.params))

    @cached_property
    def fn(self):
        return compile_expr(self.body, self.arity, self.params, self.max_bits)

    @property
    def text(self) -> str:
        return format_expr(self.body)

    def __call__(self, *args: int) -> int | None:
        return eval_op(self, args)

    def raw(self, *args: int) -> int:
        """Evaluate ignoring the domain; may raise Undefined or TooLarge."""
        return self.fn(*args)

    def with_domain(self, domain: DomainSpec) -> "OpSpec":
        return OpSpec(self.name, self.arity, self.body, self.params, domain, self.max_bits)

    def __getstate__(self):
        state = dict(self.__dict__)
        state.pop("fn", None)
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)

    def __hash__(self):
        return hash((self.arity, self.body, tuple(sorted(self.params.items())), self.domain))

    def __eq__(self, other):
        if not isinstance(other, OpSpec):
            return NotImplemented
        return (self.arity, self.body, self.params, self.domain) == \
            (other.arity, other.body, other.params, other.domain)


def renumber(e: Expr, mapping: Mapping[int, int]) -> Expr:
    if isinstance(e, Var):
        return Var(mapping.get(e.index, e.index))
    if isinstance(e, (Neg, Abs)):
        return type(e)(renumber(e.arg, mapping))
    if isinstance(e, BinOp):
        return BinOp(e.op, renumber(e.left, mapping), renumber(e.right, mapping))
    if isinstance(e, Call):
        return Call(e.name, renumber(e.arg, mapping), renumber(e.other, mapping))
    return e


def parse_op_expr(text: str, arity: int | None = None, params: Mapping[str, int] | None = None,
                  domain: DomainSpec | None = None, name: str | None = None,
                  max_bits: int = DEFAULT_MAX_BITS) -> OpSpec:
    """Parse ``text`` into an :class:`OpSpec`.

    ``arity`` defaults to the largest variable index used (at least 1).
    When a smaller arity is given and the expression uses at most that many
    distinct variables, they are renumbered in order, so ``z^2`` with arity
    1 is the unary ``x1^2``.

    >>> op = parse_op_expr("x*y-3", 2, domain=DomainSpec("z"))
    >>> eval_op(op, [1, 4])
    1
    """
    body = parse_expr(text)
    used = sorted(variables(body))
    if arity is None:
        arity = used[-1] if used else 1
    elif used and used[-1] > arity and len(used) <= arity:
        body = renumber(body, {old: new for new, old in enumerate(used, 1)})
    return OpSpec(name or text, arity, body, dict(params or {}), domain or DomainSpec(), max_bits)


def eval_op(op: OpSpec, args: Sequence[int]) -> int | None:
    """``f(args)``, or ``None`` when undefined or outside the domain.

    Raises :class:`TooLarge` when the bit budget is exceeded.
    """
    if len(args) != op.arity:
        raise ArityError(f"expected {op.arity} arguments, got {len(args)}")
    try:
        value = op.fn(*args)
    except Undefined:
        return None
    return value if value in op.domain else None


def try_raw(op: OpSpec, args: Sequence[int]) -> int | None:
    """Raw value or ``None`` when undefined; :class:`TooLarge` propagates."""
    try:
        return op.fn(*args)
    except Undefined:
        return None


# ---------------------------------------------------------------------------
# Structural analysis used by the exact decision procedures

Poly = dict  # exponent tuple -> integer coefficient


def _poly_add(a: Poly, b: Poly, sign: int = 1) -> Poly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
        if out[k] == 0:
            del out[k]
    return out


def _poly_mul(a: Poly, b: Poly, nvars: int) -> Poly:
    out: Poly = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            out[k] = out.get(k, 0) + va * vb
            if out[k] == 0:
                del out[k]
    return out


def _const(p: Poly, nvars: int) -> int | None:
    zero = (0,) * nvars
    if not p:
        return 0
    if set(p) == {zero}:
        return p[zero]
    return None


def polynomial(expr: Expr, params: Mapping[str, int], fixed: Mapping[int, int],
               free: Sequence[int], max_degree: int = 64) -> Poly | None:
    """Polynomial form of ``expr`` in the ``free`` variables.

    Variables in ``fixed`` are substituted.  Returns ``None`` when the
    expression is not a polynomial with integer coefficients (partial
    constructs over free variables, variable exponents, ...).  Raises
    :class:`Undefined` if a constant subexpression is undefined.
    """
    nv = len(free)
    slot = {v: i for i, v in enumerate(free)}
    zero = (0,) * nv

    def c(v: int) -> Poly:
        return {zero: v} if v else {}

    def go(e: Expr) -> Poly | None:
        if isinstance(e, Int):
            return c(e.value)
        if isinstance(e, Param):
            return c(params[e.name])
        if isinstance(e, Var):
            if e.index in fixed:
                return c(fixed[e.index])
            if e.index not in slot:
                raise KeyError(f"x{e.index} neither fixed nor free")
            k = [0] * nv
            k[slot[e.index]] = 1
            return {tuple(k): 1}
        if isinstance(e, Neg):
            a = go(e.arg)
            return None if a is None else {k: -v for k, v in a.items()}
        if isinstance(e, Abs):
            a = go(e.arg)
            ca = None if a is None else _const(a, nv)
            return None if ca is None else c(abs(ca))
        if isinstance(e, Call):
            a, b = go(e.arg), go(e.other)
            ca = None if a is None else _const(a, nv)
            cb = None if b is None else _const(b, nv)
            if ca is None or cb is None:
                return None
            return c(exact_root(ca, cb) if e.name == "root" else exact_log(ca, cb))
        a, b = go(e.left), go(e.right)
        if e.op == "+":
            return None if a is None or b is None else _poly_add(a, b)
        if e.op == "-":
            return None if a is None or b is None else _poly_add(a, b, -1)
        if e.op == "*":
            return None if a is None or b is None else _poly_mul(a, b, nv)
        if e.op == "/":
            ca = None if a is None else _const(a, nv)
            cb = None if b is None else _const(b, nv)
            if ca is None or cb is None:
                return None
            return c(exact_div(ca, cb))
        # power
        if b is None or a is None:
            if a is not None and _const(a, nv) == 1:
                return c(1)
            return None
        cb = _const(b, nv)
        if cb is None:
            ca = _const(a, nv)
            return c(1) if ca == 1 else None
        if cb < 0:
            ca = _const(a, nv)
            if ca is None:
                return None
            return c(guarded_pow(ca, cb))
        if cb > max_degree and _const(a, nv) is None:
            return None
        ca = _const(a, nv)
        if ca is not None:
            return c(guarded_pow(ca, cb))
        out = {zero: 1}
        for _ in range(cb):
            out = _poly_mul(out, a, nv)
        return out

    return go(expr)


def affine_section(op: OpSpec, fixed: Mapping[int, int]) -> tuple[int, dict[int, int]] | None:
    """If ``op`` with ``fixed`` arguments is affine in the rest, return
    ``(constant, {position: coefficient})`` (positions 1-based).

    Returns ``None`` when not affine, or when a constant part is undefined.
    """
    free = [j for j in range(1, op.arity + 1) if j not in fixed]
    try:
        p = polynomial(op.body, op.params, fixed, free)
    except Undefined:
        return None
    if p is None:
        return None
    const = 0
    coeffs = {j: 0 for j in free}
    for k, v in p.items():
        deg = sum(k)
        if deg == 0:
            const = v
        elif deg == 1:
            coeffs[free[k.index(1)]] = v
        else:
            return None
    return const, coeffs


def is_monotone(op: OpSpec) -> bool:
    """True when ``op`` is non-decreasing in every argument over its domain.

    Only decided for domains bounded below by 0; recognised forms are
    polynomials with non-negative coefficients and expressions built from
    non-negative constants, variables, ``+``, ``*`` and ``^`` where every
    base with a non-constant exponent is at least 1 on the domain.
    """
    lo = op.domain.minimum
    if lo is None or lo < 0:
        return False
    free = list(range(1, op.arity + 1))
    try:
        p = polynomial(op.body, op.params, {}, free)
    except (Undefined, TooLarge):
        p = None
    if p is not None:
        return all(v >= 0 for v in p.values())

    mins = [lo] * op.arity

    def minimum(e: Expr) -> int | None:
        try:
            return compile_expr(e, op.arity, op.params)(*mins)
        except (Undefined, TooLarge):
            return None

    def mono(e: Expr) -> bool:
        if isinstance(e, Int):
            return e.value >= 0
        if isinstance(e, Param):
            return op.params[e.name] >= 0
        if isinstance(e, Var):
            return True
        if isinstance(e, BinOp) and e.op in "+*":
            return mono(e.left) and mono(e.right)
        if isinstance(e, BinOp) and e.op == "^":
            if not (mono(e.left) and mono(e.right)):
                return False
            if not variables(e.right):
                return True
            m = minimum(e.left)
            return m is not None and m >= 1
        return False

    return mono(op.body)


def frobenius_number(gens: Sequence[int], limit: int = 1 << 20) -> int | None:
    """Largest integer that is not a non-negative combination of ``gens``.

    ``-1`` when every non-negative integer is representable, ``None`` when the
    gcd is not 1 or the search would exceed ``limit``.
    """
    gens = sorted({g for g in gens if g > 0})
    if not gens or math.gcd(*gens) != 1:
        return None
    if gens[0] == 1:
        return -1
    bound = gens[0] * gens[-1]
    if bound > limit:
        return None
    reach = bytearray(bound + 1)
    reach[0] = 1
    for v in range(1, bound + 1):
        reach[v] = any(g <= v and reach[v - g] for g in gens)
    return max(v for v in range(bound + 1) if not reach[v])
