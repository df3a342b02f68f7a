"""Diophantine searches phrased through generalized composites.

``f(x) = g(y)`` has a solution that is nowhere trivial exactly when the
common value is composite for both operations, so intersections of
composite sets, prime covers and representability scans all reduce to
finite searches with the certification bounds of :mod:`genprime`.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .genprime import (_HUGE, CertBounds, Certified, TopLevel, _Analyzer, _domain_values, _exceeds,
                       _monotone, _value, is_nary_unit, prime_set, sieve)
from .opexpr import DomainSpec, OpSpec, TooLarge, Undefined, affine_section, polynomial


@dataclass(frozen=True)
class SolutionBox:
    """Inclusive ranges for each variable of ``f`` followed by those of ``g``."""

    f_ranges: tuple[tuple[int, int], ...]
    g_ranges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for lo, hi in self.f_ranges + self.g_ranges:
            if hi < lo:
                raise ValueError("box ranges must be non-empty")

    @classmethod
    def cube(cls, lo: int, hi: int, f_arity: int, g_arity: int) -> "SolutionBox":
        return cls(((lo, hi),) * f_arity, ((lo, hi),) * g_arity)

    @property
    def radius(self) -> int:
        return max(max(abs(lo), abs(hi)) for lo, hi in self.f_ranges + self.g_ranges)


@dataclass(frozen=True)
class SolutionRecord:
    f_args: tuple[int, ...]
    g_args: tuple[int, ...]
    value: int
    triviality: tuple[Certified, ...]

    @property
    def assignment(self) -> tuple[int, ...]:
        return self.f_args + self.g_args

    @property
    def nowhere_trivial(self) -> bool:
        return not any(t.value for t in self.triviality)

    def to_dict(self) -> dict:
        return {"f_args": list(self.f_args), "g_args": list(self.g_args), "value": self.value,
                "trivial": [t.to_dict() for t in self.triviality]}


def _image(op: OpSpec, ranges: Sequence[tuple[int, int]]) -> dict[int, list[tuple[int, ...]]]:
    out: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    axes = [[v for v in range(lo, hi + 1) if v in op.domain] for lo, hi in ranges]
    for args in product(*axes):
        v = _value(op, args)
        if v is not None and v is not _HUGE:
            out[v].append(args)
    return out


def is_trivial_in(f: OpSpec, args: Sequence[int], i: int, bounds: CertBounds | None = None) -> Certified:
    """Fixing coordinate ``i`` (1-based) at ``args[i-1]`` still reaches every
    domain element through the other coordinates."""
    bounds = bounds or CertBounds.default((0, max(abs(a) for a in args)), f.domain)
    return is_nary_unit(f, args[i - 1], i, bounds)


def solve_box(f: OpSpec, g: OpSpec, box: SolutionBox, bounds: CertBounds | None = None) -> list[SolutionRecord]:
    """All ``(x, y)`` in the box with ``f(x) = g(y)``, in lexicographic order."""
    if len(box.f_ranges) != f.arity or len(box.g_ranges) != g.arity:
        raise ValueError("box dimensions must match the arities of f and g")
    bounds = bounds or CertBounds.default((0, box.radius), f.domain)
    fi, gi = _image(f, box.f_ranges), _image(g, box.g_ranges)
    trivial_cache: dict[tuple[str, int, int], Certified] = {}

    def trivial(op: OpSpec, tag: str, args: tuple[int, ...]) -> tuple[Certified, ...]:
        out = []
        for j, a in enumerate(args, 1):
            key = (tag, j, a)
            if key not in trivial_cache:
                trivial_cache[key] = is_nary_unit(op, a, j, bounds)
            out.append(trivial_cache[key])
        return tuple(out)

    records = []
    for v in sorted(set(fi) & set(gi)):
        for xa in fi[v]:
            for ya in gi[v]:
                records.append(SolutionRecord(xa, ya, v, trivial(f, "f", xa) + trivial(g, "g", ya)))
    records.sort(key=lambda r: r.assignment)
    return records


def _composite_witnesses(op: OpSpec, lo: int, hi: int, bounds: CertBounds,
                         values: set[int] | None = None) -> dict[int, tuple[int, ...]]:
    an = _Analyzer(op, bounds, TopLevel())
    found, _, _ = an.top_level(lo, hi)
    out = {}
    for m, args in found.items():
        if values is not None and m not in values:
            continue
        out[m] = args
    return out


def composite_intersection(f: OpSpec, g: OpSpec, value_window: tuple[int, int],
                           bounds: CertBounds | None = None,
                           h: OpSpec | None = None) -> dict[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Values in the window that are composite for both ``f`` and ``g``
    (top-level), mapped to one witness pair ``(f_args, g_args)``.

    With a unary ``h`` only values ``h(c)``, ``c`` in the window, are
    considered.
    """
    lo, hi = value_window
    values = None
    if h is not None:
        values = {v for c in range(lo, hi + 1) if (v := h(c)) is not None}
        lo, hi = (min(values), max(values)) if values else (lo, lo - 1)
        if not values:
            return {}
    bounds = bounds or CertBounds.default((lo, hi), f.domain)
    fw = _composite_witnesses(f, lo, hi, bounds, values)
    gw = _composite_witnesses(g, lo, hi, bounds, set(fw))
    out = {}
    for m in sorted(gw):
        # composites are not units
        if any(is_nary_unit(f, m, j, bounds).value for j in range(1, f.arity + 1)):
            continue
        if any(is_nary_unit(g, m, j, bounds).value for j in range(1, g.arity + 1)):
            continue
        out[m] = (fw[m], gw[m])
    return out


@dataclass(frozen=True)
class CoverReport:
    window: tuple[int, int]
    covered: bool
    exceptions: tuple[int, ...]
    consistent: bool

    def to_dict(self) -> dict:
        return {"window": list(self.window), "covered": self.covered,
                "exceptions": list(self.exceptions), "consistent_with_intersection": self.consistent}


def prime_cover_check(f: OpSpec, g: OpSpec, window: tuple[int, int],
                      bounds: CertBounds | None = None, jobs: int = 1) -> CoverReport:
    """Is every window element prime or a unit for ``f`` or for ``g``?

    The exceptions come from full sieves of both operations and are
    cross-checked against :func:`composite_intersection`.
    """
    bounds = bounds or CertBounds.default(window, f.domain)
    sf = sieve(f, window, bounds, jobs=jobs)
    sg = sieve(g, window, bounds, jobs=jobs)
    ok = {"prime", "unit"}
    exceptions = tuple(n for n in sf.members if n in sg._index
                       and sf.verdict(n) not in ok and sg.verdict(n) not in ok)
    inter = composite_intersection(f, g, window, bounds)
    return CoverReport(tuple(window), not exceptions, exceptions, set(exceptions) == set(inter))


class _PrefixImages:
    """Lexicographically first qualifying representation of each value for a
    monotone op, built from cached images of the last two arguments for each
    fixed prefix of the earlier ones."""

    def __init__(self, op: OpSpec, hi: int, bounds: CertBounds):
        self.op = op
        self.hi = hi
        self.an = _Analyzer(op, bounds, TopLevel())
        self.tail = min(2, op.arity)
        self.values = _domain_values(op.domain, bounds.witness_radius)
        self.lo = op.domain.minimum
        self.cache: dict[tuple[int, ...], dict[int, tuple[int, ...]]] = {}
        self.ok_cache: dict[tuple[int, int], bool] = {}
        self.base = (self.lo,) * (op.arity - self.tail)
        self.separable = _separable(op) and op.arity > self.tail
        if self.separable:
            self.base_value = _value(op, list(self.base) + [self.lo] * self.tail)

    def _ok(self, j: int, a: int) -> bool:
        key = (j, a)
        ok = self.ok_cache.get(key)
        if ok is None:
            ok = self.ok_cache[key] = not self.an.unit(j, a).value
        return ok

    def _tail_image(self, prefix: tuple[int, ...]) -> dict[int, tuple[int, ...]]:
        img = self.cache.get(prefix)
        if img is not None:
            return img
        img = {}
        k = len(prefix)
        fn, hi = self.op.fn, self.hi
        dom = None if self.op.domain.kind in ("n0", "n1") else self.op.domain
        floor = self.lo if self.lo is not None else -math.inf
        ok = self.ok_cache
        j2 = k + 2
        pad = [self.lo] * self.tail
        for a in self.values:
            first = list(prefix) + [a] + pad[1:]
            if _exceeds(_value(self.op, first), hi):
                break
            if not self._ok(k + 1, a):
                continue
            if self.tail == 1:
                img.setdefault(_value(self.op, first), (a,))
                continue
            args = list(prefix) + [a]
            for b in self.values:
                try:
                    v = fn(*args, b)
                except (Undefined, TooLarge):
                    v = _value(self.op, args + [b])
                    if v is None:
                        continue
                    if v is _HUGE:
                        break
                if v > hi:
                    break
                if v in img or v < floor or (dom is not None and v not in dom):
                    continue
                good = ok.get((j2, b))
                if good is None:
                    good = self._ok(j2, b)
                if good:
                    img[v] = (a, b)
        self.cache[prefix] = img
        return img

    def find(self, n: int) -> tuple[int, ...] | None:
        return self._walk((), n)

    def _walk(self, prefix: tuple[int, ...], n: int) -> tuple[int, ...] | None:
        if len(prefix) == self.op.arity - self.tail:
            if self.separable:
                # f(P, a, b) = f(base, a, b) + f(P, lo, lo) - f(base, lo, lo)
                shift = _value(self.op, list(prefix) + [self.lo] * self.tail) - self.base_value
                hit = self._tail_image(self.base).get(n - shift)
            else:
                hit = self._tail_image(prefix).get(n)
            return None if hit is None else prefix + hit
        k = len(prefix)
        for a in self.values:
            args = list(prefix) + [a] + [self.lo] * (self.op.arity - k - 1)
            if _exceeds(_value(self.op, args), n):
                break
            if not self._ok(k + 1, a):
                continue
            hit = self._walk(prefix + (a,), n)
            if hit is not None:
                return hit
        return None


def _separable(op: OpSpec) -> bool:
    """Polynomial without mixed monomials: a sum of one-variable parts."""
    try:
        p = polynomial(op.body, op.params, {}, list(range(1, op.arity + 1)))
    except (Undefined, TooLarge):
        return False
    return p is not None and all(sum(1 for e in k if e) <= 1 for k in p)


def representable_scan(op: OpSpec, lo: int, hi: int, bounds: CertBounds | None = None
                       ) -> dict[int, tuple[int, ...] | None]:
    """:func:`representable` for every ``n`` in ``[lo, hi]``, sharing work."""
    bounds = bounds or CertBounds.default((lo, hi), op.domain)
    if _monotone(op):
        index = _PrefixImages(op, hi, bounds)
        return {n: index.find(n) for n in range(lo, hi + 1)}
    an = _Analyzer(op, bounds, TopLevel())
    found, _, _ = an.top_level(lo, hi)
    out = {}
    for n in range(lo, hi + 1):
        if n in found:
            out[n] = tuple(found[n])
        else:
            out[n] = next((args for args in an._solve_exact(n) if an._status(args) == "ok"), None)
    return out


def representable(op: OpSpec, n: int, bounds: CertBounds | None = None) -> tuple[int, ...] | None:
    """Arguments, each failing its positional unit test, with ``f(args) = n``
    (lexicographically first), or ``None``."""
    return representable_scan(op, n, n, bounds)[n]


def cover_scan(base: DomainSpec | Sequence[int], outer: OpSpec, value_range: tuple[int, int],
               step: int = 1) -> list[int]:
    """Every ``n`` in the range (every ``step``-th value) that is not
    ``outer(p, q)`` with ``p, q`` in ``base``.

    Values are not required to lie in ``base`` themselves.  Affine sections
    are inverted exactly; otherwise ``q`` runs over ``base``.
    """
    elements = base.elements if isinstance(base, DomainSpec) else tuple(base)
    if list(elements) != sorted(set(elements)):
        raise ValueError("base must be sorted without duplicates")
    if outer.arity != 2:
        raise ValueError("cover_scan needs a binary outer operation")
    members = frozenset(elements)
    sections = {}
    for p in elements:
        sec = affine_section(outer, {1: p})
        sections[p] = sec if sec is not None and sec[1][2] != 0 else None
    monotone = _monotone(outer.with_domain(DomainSpec.explicit(elements))) if elements else False
    lo, hi = value_range
    failures = []
    for n in range(lo, hi + 1, step):
        if not _covered(n, elements, members, sections, outer, monotone):
            failures.append(n)
    return failures


def _covered(n, elements, members, sections, outer, monotone) -> bool:
    for p in elements:
        sec = sections[p]
        if sec is not None:
            const, coeffs = sec
            c = coeffs[2]
            if (n - const) % c == 0 and (n - const) // c in members:
                return True
            if monotone and const + c * elements[0] > n:
                return False
            continue
        for q in elements:
            try:
                v = outer.raw(p, q)
            except Undefined:
                continue
            if v == n:
                return True
            if monotone and v > n:
                break
        if monotone:
            try:
                if outer.raw(p, elements[0]) > n:
                    return False
            except Undefined:
                pass
    return False


@dataclass(frozen=True)
class GoldbachReport:
    base_op: str
    value_range: tuple[int, int]
    base_size: int
    failures: tuple[int, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {"base_op": self.base_op, "range": list(self.value_range), "base_size": self.base_size,
                "failures": list(self.failures)}


def goldbach(base_op: OpSpec, value_range: tuple[int, int], outer: OpSpec | None = None,
             step: int = 1, jobs: int = 1) -> GoldbachReport:
    """Which values are not ``p + q`` (or ``outer(p, q)``) for primes ``p, q`` of ``base_op``?"""
    from .opexpr import parse_op_expr

    lo, hi = value_range
    base = prime_set(base_op, (base_op.domain.minimum or 1, hi), jobs=jobs)
    outer = outer or parse_op_expr("x+y", 2)
    failures = cover_scan(base, outer, value_range, step)
    return GoldbachReport(base_op.text, (lo, hi), len(base.elements), tuple(failures))


def four_squares(hi: int, lo: int = 1) -> dict[int, tuple[int, ...] | None]:
    """Lagrange scan: witnesses for ``x1^2 + x2^2 + x3^2 + x4^2`` over the non-negative integers."""
    from .opexpr import parse_op_expr

    op = parse_op_expr("x1^2+x2^2+x3^2+x4^2", 4, domain=DomainSpec("n0"))
    return representable_scan(op, lo, hi)


__all__ = ["SolutionBox", "SolutionRecord", "CoverReport", "GoldbachReport", "solve_box", "is_trivial_in",
           "composite_intersection", "prime_cover_check", "representable", "representable_scan",
           "cover_scan", "goldbach", "four_squares"]
