"""Generalized congruences, power folds and the two extended Fermat theorems.

``c ==_g b (mod_f m)`` holds when ``m`` is an ``f``-factor of
``d = c o_{g^-1} b``, i.e. ``f(alpha, m) = d`` or ``f(m, alpha) = d`` for some
``alpha`` (top-level).  With ``g = +`` and ``f = xy`` over the integers this
is ordinary congruence modulo ``m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from sympy import isprime

from .genprime import CertBounds, Certified, TopLevel, Semantics, _value
from .opexpr import DomainSpec, OpSpec, TooLarge, Undefined, affine_section, parse_op_expr

Z = DomainSpec("z")


@dataclass(frozen=True)
class InversePair:
    """``g_inv`` undoes ``g`` on the given side: right means
    ``(a o_g b) o_ginv b = a``, left means ``b o_ginv (b o_g a) = a``."""

    g: OpSpec
    g_inv: OpSpec
    side: str = "right"

    def __post_init__(self):
        if self.side not in ("right", "left"):
            raise ValueError("side is 'right' or 'left'")
        if self.g.arity != 2 or self.g_inv.arity != 2:
            raise ValueError("inverse pairs are binary operations")

    def undo(self, c: int, b: int) -> int | None:
        """``c o_ginv b`` (right) or ``b o_ginv c`` (left); ``None`` if undefined."""
        args = (c, b) if self.side == "right" else (b, c)
        try:
            return self.g_inv.raw(*args)
        except (Undefined, TooLarge):
            return None


@dataclass(frozen=True)
class InverseReport:
    result: Certified
    checked: int
    skipped: int
    counterexample: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        return {"holds": self.result.value, "status": self.result.status, "checked": self.checked,
                "skipped_undefined": self.skipped, "counterexample": self.counterexample}


def inverse_check(pair: InversePair, sample_bound: int) -> InverseReport:
    """Check the inverse law for every ``a, b`` of ``g``'s domain within
    ``sample_bound``.  Pairs where either side is undefined are skipped,
    but at least one pair must be checked."""
    vals = [v for v in pair.g.domain.candidates(sample_bound) if abs(v) <= sample_bound] \
        if pair.g.domain.kind != "set" else [v for v in pair.g.domain.elements if abs(v) <= sample_bound]
    checked = skipped = 0
    bounds = CertBounds((min(vals), max(vals)), sample_bound)
    for a, b in product(sorted(vals), repeat=2):
        c = _value(pair.g, (a, b) if pair.side == "right" else (b, a))
        back = pair.undo(c, b) if isinstance(c, int) else None
        if back is None:
            skipped += 1
            continue
        checked += 1
        if back != a:
            return InverseReport(Certified(False, True, bounds), checked, skipped, (a, b))
    if not checked:
        raise ValueError("no sample pair had both sides defined")
    return InverseReport(Certified(True, False, bounds), checked, skipped)


@dataclass(frozen=True)
class CongruenceQuery:
    c: int
    b: int
    m: int
    pair: InversePair
    f: OpSpec
    semantics: Semantics = field(default_factory=TopLevel)


@dataclass(frozen=True)
class CongruenceResult:
    result: Certified
    difference: int | None
    alpha: int | None = None
    position: int | None = None
    diagnostic: str = ""

    @property
    def value(self) -> bool:
        return self.result.value

    def __bool__(self) -> bool:
        return self.result.value


def _factor_alpha(f: OpSpec, m: int, d: int, bounds: CertBounds) -> tuple[int | None, int | None, bool]:
    """``(alpha, position_of_m, proven)`` with ``f(alpha, m) = d`` or
    ``f(m, alpha) = d``; ``alpha`` is ``None`` when no factor is found."""
    exact = True
    for pos in (2, 1):
        free = 3 - pos
        sec = affine_section(f, {pos: m})
        if sec is not None:
            const, coeffs = sec
            c = coeffs[free]
            if c == 0:
                if const == d:
                    alpha = next(iter(_domain_values(f.domain, 1)))
                    return alpha, pos, True
                continue
            if (d - const) % c == 0 and (d - const) // c in f.domain:
                return (d - const) // c, pos, True
            continue
        exact = False
        for alpha in _domain_values(f.domain, bounds.witness_radius):
            args = (alpha, m) if pos == 2 else (m, alpha)
            if _value(f, args) == d:
                return alpha, pos, True
    return None, None, exact


def _domain_values(domain: DomainSpec, radius: int):
    return domain.elements if domain.kind == "set" else domain.candidates(radius)


def congruent(q: CongruenceQuery, bounds: CertBounds | None = None) -> CongruenceResult:
    """``c ==_g b (mod_f m)``: is ``m`` an ``f``-factor of ``c o_ginv b``?

    Affine sections of ``f`` are solved exactly (a proven answer); other
    operations are searched within ``bounds.witness_radius``.
    """
    if not isinstance(q.semantics, TopLevel):
        raise ValueError("congruences are decided under top-level semantics")
    d = q.pair.undo(q.c, q.b)
    if d is None:
        return CongruenceResult(Certified(False, True), None, diagnostic="c o_ginv b is undefined")
    if q.m not in q.f.domain:
        raise ValueError(f"{q.m} is not in the domain of f")
    bounds = bounds or CertBounds.default((-abs(d), abs(d)), q.f.domain)
    alpha, pos, exact = _factor_alpha(q.f, q.m, d, bounds)
    if alpha is not None:
        return CongruenceResult(Certified(True, True), d, alpha, pos)
    return CongruenceResult(Certified(False, exact, None if exact else bounds), d)


def power_fold(op: OpSpec, a: int, p: int) -> int:
    """``a o (a o (... o (a o a)))`` with ``p`` copies of ``a``.

    Undefined intermediate values raise :class:`Undefined`; the op's bit
    budget raises :class:`TooLarge`.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    acc = a
    fn = op.fn
    for _ in range(p - 1):
        acc = fn(a, acc)
    return acc


@lru_cache(maxsize=64)
def kxy_op(k: int) -> OpSpec:
    return parse_op_expr("k*x*y", 2, {"k": k}, Z)


@lru_cache(maxsize=256)
def linear_op(u: int, v: int) -> OpSpec:
    return parse_op_expr("u*x+v*y", 2, {"u": u, "v": v}, Z)


PLUS = InversePair(parse_op_expr("x+y", 2, domain=Z), parse_op_expr("x-y", 2, domain=Z))


def kxy_closed_form(k: int, a: int, p: int) -> int:
    """The ``kxy`` fold of ``p`` copies of ``a``: ``k^(p-1) a^p``."""
    return k ** (p - 1) * a ** p


def linear_closed_form(u: int, v: int, k: int, p: int) -> int:
    """The ``ux + vy`` fold of ``p`` copies of ``k``."""
    if v == 1:
        return k * (1 + u * (p - 1))
    vp = v ** (p - 1)
    return k * (u * (vp - 1) // (v - 1) + vp)


@dataclass(frozen=True)
class FermatResult:
    holds: bool
    fold: int
    via_congruence: bool
    via_closed_form: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _need_prime(p: int) -> None:
    if not isprime(p):
        raise ValueError(f"p = {p} is not prime")


def fermat_kxy_check(k: int, a: int, p: int) -> FermatResult:
    """For ``gcd(k, p) = 1``: ``a^(o p) o 1 ==_+ a o 1 (mod_{kxy} p)`` where the
    fold and ``o`` are ``kxy``.

    Checked through :func:`congruent` and through the closed forms
    ``fold = k^(p-1) a^p`` and ``k p | k^p a^p - k a``.
    """
    _need_prime(p)
    if math.gcd(k, p) != 1:
        raise ValueError(f"gcd(k, p) = gcd({k}, {p}) must be 1")
    op = kxy_op(k)
    fold = power_fold(op, a, p)
    lhs = op.fn(fold, 1)
    rhs = op.fn(a, 1)
    via_cong = congruent(CongruenceQuery(lhs, rhs, p, PLUS, op)).value
    closed = fold == kxy_closed_form(k, a, p) and (k ** p * a ** p - k * a) % (k * p) == 0
    return FermatResult(via_cong and closed, fold, via_cong, closed)


def fermat_linear_check(u: int, v: int, h: int, k: int, p: int) -> FermatResult:
    """For ``u = h(v - 1)`` and ``gcd(p, v) = 1``: ``p`` divides
    ``k^(o p) - k`` where the fold is over ``ux + vy``.

    For ``v != 1`` the fold is also compared with the closed form
    ``k (u (v^(p-1) - 1) / (v - 1) + v^(p-1))``; ``v = 1`` forces ``u = 0``
    and the fold is just ``k``.
    """
    _need_prime(p)
    if v == 1 and u != 0:
        raise ValueError("v = 1 requires u = 0")
    if u != h * (v - 1):
        raise ValueError(f"u = {u} must equal h(v - 1) = {h * (v - 1)}")
    if math.gcd(p, v) != 1:
        raise ValueError(f"gcd(p, v) = gcd({p}, {v}) must be 1")
    fold = power_fold(linear_op(u, v), k, p)
    divides = (fold - k) % p == 0
    via_cong = congruent(CongruenceQuery(fold, k, p, PLUS, kxy_op(1))).value
    closed = fold == linear_closed_form(u, v, k, p)
    return FermatResult(divides and via_cong and closed, fold, via_cong, closed)


LOG_PAIR_TEXT = ("y^x", "log(x, y)")


def exp_log_pair() -> InversePair:
    """Level-2 hyperoperation ``a o2 b = b^a`` with its right inverse ``log_b``."""
    return InversePair(parse_op_expr(LOG_PAIR_TEXT[0], 2), parse_op_expr(LOG_PAIR_TEXT[1], 2))
