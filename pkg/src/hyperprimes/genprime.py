"""Generalized units, composites and primes of an arbitrary operation.

For ``f`` over a domain M, ``u`` is a unit in position ``j`` when every
``k`` in M equals ``f(..., u, ...)`` (``u`` at position ``j``) for some
choice of the other arguments.  A non-unit ``m`` is composite when
``m = f(a_1, ..., a_n)`` with every ``a_j`` failing the position-``j`` unit
test (top-level semantics), or, under ``Deep(d)``, when some representation
tree of depth at most ``d`` contains such an application.  Everything else
is prime.

Unit tests quantify over all of M, so every answer is :class:`Certified`:
``proven`` when an exact argument applies (affine sections, monotone
escape bounds, finite explicit domains), otherwise bounded by the
:class:`CertBounds` that were searched.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator, Sequence, Union

from .opexpr import (DomainSpec, OpSpec, TooLarge, Undefined, affine_section, frobenius_number,
                     is_monotone)

UNIT, COMPOSITE, PRIME, UNKNOWN = "unit", "composite", "prime", "unknown"
_CODES = (UNIT, COMPOSITE, PRIME, UNKNOWN)
DEFAULT_MIN_RADIUS = 16
MAX_DOUBLINGS = 3


class NotFound(LookupError):
    pass


@dataclass(frozen=True)
class CertBounds:
    """Finite stand-ins for the unbounded quantifiers.

    ``target_span`` is the range the "for every k" part is checked over,
    ``witness_radius`` bounds the argument search and ``deep_depth`` the
    depth of representation trees.
    """

    target_span: tuple[int, int]
    witness_radius: int
    deep_depth: int = 1

    def __post_init__(self):
        lo, hi = self.target_span
        if hi < lo or self.witness_radius < 0 or self.deep_depth < 1:
            raise ValueError("bounds must be non-empty and finite")

    @classmethod
    def default(cls, window: tuple[int, int], domain: DomainSpec, depth: int = 1) -> "CertBounds":
        s = max(abs(window[0]), abs(window[1]), DEFAULT_MIN_RADIUS)
        if domain.kind == "set":
            span = (domain.elements[0], domain.elements[-1]) if domain.elements else (0, 0)
        elif domain.kind == "z":
            span = (-s, s)
        else:
            span = (domain.minimum, max(domain.minimum, s))
        return cls(span, s, depth)

    def to_dict(self) -> dict:
        return {"target_span": list(self.target_span), "witness_radius": self.witness_radius,
                "deep_depth": self.deep_depth}


@dataclass(frozen=True)
class Certified:
    value: bool
    proven: bool
    bounds: CertBounds | None = None
    note: str = ""

    @property
    def status(self) -> str:
        return "proven" if self.proven else "bounded"

    def __bool__(self) -> bool:
        return self.value

    def to_dict(self) -> dict:
        out = {"value": self.value, "status": self.status}
        if not self.proven and self.bounds is not None:
            out["bounds"] = self.bounds.to_dict()
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class TopLevel:
    def __str__(self) -> str:
        return "top"


@dataclass(frozen=True)
class Deep:
    depth: int

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be at least 1")

    def __str__(self) -> str:
        return f"deep:{self.depth}"


Semantics = Union[TopLevel, Deep]


def parse_semantics(text: str) -> Semantics:
    if text in ("top", "toplevel"):
        return TopLevel()
    if text.startswith("deep:"):
        return Deep(int(text[5:]))
    raise ValueError(f"semantics must be 'top' or 'deep:<d>', got {text!r}")


@dataclass(frozen=True)
class Comb:
    """Representation tree node: ``value = f(*args)``; args are integers or
    nested :class:`Comb` nodes."""

    args: tuple
    value: int

    def evaluate(self, op: OpSpec) -> int | None:
        vals = [a.evaluate(op) if isinstance(a, Comb) else a for a in self.args]
        if any(v is None for v in vals):
            return None
        return op(*vals)

    def top_args(self) -> tuple[int, ...]:
        return tuple(a.value if isinstance(a, Comb) else a for a in self.args)

    def to_json(self):
        return [a.to_json() if isinstance(a, Comb) else a for a in self.args]

    def __str__(self) -> str:
        return "f(" + ", ".join(str(a) for a in self.args) + ")"


@dataclass(frozen=True)
class Classification:
    n: int
    verdict: str
    units: tuple[Certified, ...]
    witness: Comb | None = None
    proven: bool = False
    bounds: CertBounds | None = None

    @property
    def left(self) -> Certified:
        return self.units[0]

    @property
    def right(self) -> Certified:
        return self.units[-1]

    def to_dict(self) -> dict:
        out = {"n": self.n, "verdict": self.verdict,
               "certification": "proven" if self.proven else "bounded"}
        if self.verdict == UNIT:
            out["unit_positions"] = [j + 1 for j, u in enumerate(self.units) if u.value]
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


# ---------------------------------------------------------------------------
# Evaluation helpers

_HUGE = object()
_monotone = lru_cache(maxsize=256)(is_monotone)


def _value(op: OpSpec, args) -> object:
    """``f(args)`` inside the domain, ``None`` if undefined, ``_HUGE`` on overflow."""
    try:
        v = op.fn(*args)
    except Undefined:
        return None
    except TooLarge:
        return _HUGE
    return v if v in op.domain else None


def _exceeds(v, bound: int) -> bool:
    return v is _HUGE or (v is not None and v > bound)


def _domain_values(domain: DomainSpec, radius: int) -> Sequence[int]:
    if domain.kind == "set":
        return domain.elements
    return domain.candidates(radius)


class _MonotoneEnum:
    """Lexicographic enumeration of argument tuples of a monotone op with
    values up to ``hi``; loops stop once the value with later arguments at
    their minimum exceeds ``hi``.

    ``floor`` records the smallest value that a loop cut off by the radius
    could still have produced; every value below it was enumerated
    completely.
    """

    def __init__(self, op: OpSpec, fixed: dict[int, int], hi: int, radius: int):
        self.op = op
        self.fixed = fixed
        self.hi = hi
        self.radius = radius
        self.free = [j for j in range(1, op.arity + 1) if j not in fixed]
        self.values = _domain_values(op.domain, radius)
        self.lo = op.domain.minimum
        self.finite = op.domain.kind == "set"
        self.floor: float = math.inf

    def _args(self, assigned: dict[int, int]) -> list[int]:
        return [self.fixed.get(j, assigned.get(j, self.lo)) for j in range(1, self.op.arity + 1)]

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], int]]:
        if not self.free:
            v = _value(self.op, self._args({}))
            if v is not None and v is not _HUGE and v <= self.hi:
                yield tuple(self._args({})), v
            return
        yield from self._loop(0, {})

    def _loop(self, depth: int, assigned: dict[int, int]):
        pos = self.free[depth]
        last = depth == len(self.free) - 1
        for a in self.values:
            assigned[pos] = a
            args = self._args(assigned)
            if not self.finite and a > self.radius:
                probe = _value(self.op, args)
                if not _exceeds(probe, self.hi) and not self._constant_beyond(assigned, depth):
                    self.floor = min(self.floor, probe if isinstance(probe, int) else self.lo)
                break
            if last:
                v = _value(self.op, args)
                if _exceeds(v, self.hi):
                    break
                if v is not None:
                    yield tuple(args), v
            else:
                probe = _value(self.op, args)
                if _exceeds(probe, self.hi):
                    break
                yield from self._loop(depth + 1, assigned)
        assigned.pop(pos, None)

    def _constant_beyond(self, assigned: dict[int, int], depth: int) -> bool:
        """The section with earlier positions fixed ignores the remaining ones."""
        fixed = dict(self.fixed)
        for p in self.free[:depth]:
            fixed[p] = assigned[p]
        sec = affine_section(self.op, fixed)
        return sec is not None and all(c == 0 for c in sec[1].values())


# ---------------------------------------------------------------------------
# Unit and zero tests

def _affine_unit(op: OpSpec, j: int, u: int) -> Certified | None:
    """Exact surjectivity decision when ``f`` with ``u`` at ``j`` is affine."""
    if op.domain.kind == "set":
        return None
    sec = affine_section(op, {j: u})
    if sec is None:
        return None
    const, coeffs = sec
    nz = [c for c in coeffs.values() if c]
    if not nz:
        return Certified(False, True, note="section is constant")
    if op.domain.kind == "z":
        ok = math.gcd(*nz) == 1
        return Certified(ok, True, note="affine section, gcd of coefficients")
    lo = op.domain.minimum
    base = const + sum(c * lo for c in coeffs.values())
    if all(c < 0 for c in nz):
        return Certified(False, True, note="affine section bounded above")
    if any(c < 0 for c in nz):
        return Certified(math.gcd(*nz) == 1, True, note="affine section with mixed signs")
    if base > lo:
        return Certified(False, True, note=f"section never reaches {lo}")
    frob = frobenius_number(nz)
    if frob is None:
        g = math.gcd(*nz)
        if g != 1:
            return Certified(False, True, note="coefficients share a factor")
        return None
    return Certified(frob < lo - base, True, note="affine section, Frobenius bound")


def _search_image(op: OpSpec, j: int, u: int, span: tuple[int, int], radius: int):
    """Values of ``f`` with ``u`` at ``j`` reached in a box or monotone scan."""
    others = [p for p in range(1, op.arity + 1) if p != j]
    seen: set[int] = set()
    if _monotone(op):
        enum = _MonotoneEnum(op, {j: u}, span[1], radius)
        for _, v in enum:
            seen.add(v)
        return seen, enum.floor
    vals = _domain_values(op.domain, radius)
    for combo in product(vals, repeat=len(others)):
        args = [0] * op.arity
        args[j - 1] = u
        for p, a in zip(others, combo):
            args[p - 1] = a
        v = _value(op, args)
        if v is not None and v is not _HUGE and span[0] <= v <= span[1]:
            seen.add(v)
    return seen, (math.inf if op.domain.kind == "set" else -math.inf)


def is_nary_unit(op: OpSpec, u: int, j: int, bounds: CertBounds) -> Certified:
    """Is ``u`` a unit in position ``j`` (1-based)?"""
    if not 1 <= j <= op.arity:
        raise ValueError(f"position {j} outside 1..{op.arity}")
    if op.arity == 1:
        # a unary section has no free argument: it reaches only f(u)
        dom = op.domain
        if dom.kind == "set":
            return Certified(len(dom.elements) == 1 and op(u) == dom.elements[0], True)
        return Certified(False, True, note="a single value cannot cover an infinite domain")
    dom = op.domain
    monotone = _monotone(op)
    if monotone:
        probe = _value(op, [u if p == j else dom.minimum for p in range(1, op.arity + 1)])
        if _exceeds(probe, dom.minimum):
            return Certified(False, True, note=f"monotone section starts above {dom.minimum}")
    exact = _affine_unit(op, j, u)
    if exact is not None:
        return exact
    if dom.kind == "set":
        targets = list(dom.elements)
        image, _ = _search_image(op, j, u, (targets[0], targets[-1]), 0)
        return Certified(all(k in image for k in targets), True, note="exhaustive over finite domain")
    span = (max(bounds.target_span[0], dom.minimum) if dom.minimum is not None else bounds.target_span[0],
            bounds.target_span[1])
    if monotone:
        # small targets first: a gap near the bottom is found without
        # enumerating the whole span
        stage = span[0] + 64
        while stage < span[1]:
            found = _unit_search(op, j, u, (span[0], stage), bounds.witness_radius, monotone, bounds)
            if found.proven and not found.value:
                return found
            stage = span[0] + (stage - span[0]) * 8
    return _unit_search(op, j, u, span, bounds.witness_radius, monotone, bounds)


def _unit_search(op: OpSpec, j: int, u: int, span: tuple[int, int], radius: int, monotone: bool,
                 bounds: CertBounds) -> Certified:
    targets = op.domain.within(*span)
    for _ in range(MAX_DOUBLINGS + 1 if monotone else 1):
        image, floor = _search_image(op, j, u, span, radius)
        missing = next((k for k in targets if k not in image), None)
        if missing is None:
            return Certified(True, False, bounds)
        if missing < floor:
            return Certified(False, True, note=f"{missing} is unreachable")
        radius *= 2
    return Certified(False, False, bounds)


def is_left_unit(op: OpSpec, u: int, bounds: CertBounds) -> Certified:
    return is_nary_unit(op, u, 1, bounds)


def is_right_unit(op: OpSpec, u: int, bounds: CertBounds) -> Certified:
    return is_nary_unit(op, u, op.arity, bounds)


def unit_witness(op: OpSpec, u: int, k: int, bounds: CertBounds, position: int = 1) -> tuple[int, ...]:
    """Other arguments ``b`` with ``f(..., u, ...) = k``; for binary ops the
    single free argument is returned as a one-tuple.

    Inverts affine sections exactly, otherwise searches within the radius.
    """
    others = [p for p in range(1, op.arity + 1) if p != position]
    sec = affine_section(op, {position: u})
    if sec is not None and len(others) == 1:
        const, coeffs = sec
        c = coeffs[others[0]]
        if c and (k - const) % c == 0 and (k - const) // c in op.domain:
            return ((k - const) // c,)
    for combo in product(_domain_values(op.domain, bounds.witness_radius), repeat=len(others)):
        args = [0] * op.arity
        args[position - 1] = u
        for p, a in zip(others, combo):
            args[p - 1] = a
        if _value(op, args) == k:
            return tuple(combo)
    raise NotFound(f"no argument within radius {bounds.witness_radius} gives {k}")


def _zero(op: OpSpec, z: int, j: int, bounds: CertBounds) -> Certified:
    sec = affine_section(op, {j: z})
    if sec is not None and all(c == 0 for c in sec[1].values()):
        return Certified(sec[0] == z, True, note="section is constant")
    others = [p for p in range(1, op.arity + 1) if p != j]
    dom = op.domain
    lo, hi = bounds.target_span
    span = dom.elements if dom.kind == "set" else dom.within(lo, hi)
    for k in span:
        args = [k] * op.arity
        args[j - 1] = z
        try:
            v = op.fn(*args)
        except (Undefined, TooLarge):
            v = None
        if v != z:
            return Certified(False, True, note=f"f at {k} gives {v}")
    return Certified(True, dom.kind == "set" and len(others) == 1, bounds)


def is_left_zero(op: OpSpec, z: int, bounds: CertBounds) -> Certified:
    """``f(z, k) = z`` for every ``k`` (other arguments set to ``k`` for n-ary ops)."""
    return _zero(op, z, 1, bounds)


def is_right_zero(op: OpSpec, z: int, bounds: CertBounds) -> Certified:
    return _zero(op, z, op.arity, bounds)


# ---------------------------------------------------------------------------
# Classification

class _Analyzer:
    def __init__(self, op: OpSpec, bounds: CertBounds, semantics: Semantics):
        self.op = op
        self.bounds = bounds
        self.semantics = semantics
        self._units: dict[tuple[int, int], Certified] = {}

    @cached_property
    def monotone(self) -> bool:
        return _monotone(self.op)

    @cached_property
    def _thresholds(self) -> dict[int, tuple[int, Certified]]:
        """Per position, the least ``u`` from which the monotone probe proves
        every larger argument a non-unit (binary search, monotone ops only)."""
        op, dom = self.op, self.op.domain
        out = {}
        if op.arity == 1 or not self.monotone or dom.kind == "set" or dom.minimum is None:
            return out
        top = max(self.bounds.target_span[1], dom.minimum)
        for j in range(1, op.arity + 1):
            def probe(u):
                return _exceeds(_value(op, [u if p == j else dom.minimum for p in range(1, op.arity + 1)]),
                                dom.minimum)
            if not probe(top):
                continue
            lo, hi = dom.minimum, top
            while lo < hi:
                mid = (lo + hi) // 2
                if probe(mid):
                    hi = mid
                else:
                    lo = mid + 1
            out[j] = (lo, Certified(False, True, note=f"monotone section starts above {dom.minimum}"))
        return out

    def unit(self, j: int, u: int) -> Certified:
        key = (j, u)
        if key not in self._units:
            t = self._thresholds.get(j)
            if t is not None and u >= t[0]:
                return t[1]
            self._units[key] = is_nary_unit(self.op, u, j, self.bounds)
        return self._units[key]

    def units_of(self, n: int) -> tuple[Certified, ...]:
        return tuple(self.unit(j, n) for j in range(1, self.op.arity + 1))

    def _status(self, args) -> str:
        """'ok' if every argument fails its unit test, 'unit' if some argument
        is a proven unit, 'blocked' if excluded only by bounded unit results."""
        flags = [self.unit(j, a) for j, a in enumerate(args, 1)]
        if not any(f.value for f in flags):
            return "ok"
        if any(f.value and f.proven for f in flags):
            return "unit"
        return "blocked"

    # top-level search -------------------------------------------------------

    def _tuples(self, lo: int, hi: int) -> tuple[Iterator, object]:
        op = self.op
        if self.monotone:
            enum = _MonotoneEnum(op, {}, hi, self.bounds.witness_radius)
            return iter(enum), enum
        vals = _domain_values(op.domain, self.bounds.witness_radius)

        def box():
            for args in product(vals, repeat=op.arity):
                v = _value(op, args)
                if v is not None and v is not _HUGE and lo <= v <= hi:
                    yield args, v
        return box(), None

    def _solve_exact(self, m: int) -> Iterator[tuple[int, ...]]:
        """Tuples with ``f = m`` found by solving one affine position exactly."""
        op = self.op
        vals = _domain_values(op.domain, self.bounds.witness_radius)
        for s in range(1, op.arity + 1):
            others = [p for p in range(1, op.arity + 1) if p != s]
            for combo in product(vals, repeat=len(others)):
                fixed = dict(zip(others, combo))
                sec = affine_section(op, fixed)
                if sec is None:
                    continue
                const, coeffs = sec
                c = coeffs[s]
                if c == 0 or (m - const) % c:
                    continue
                b = (m - const) // c
                if b not in op.domain:
                    continue
                args = tuple(fixed.get(p, b) for p in range(1, op.arity + 1))
                if _value(op, args) == m:
                    yield args

    def top_level(self, lo: int, hi: int) -> tuple[dict, set, object]:
        witnesses: dict[int, tuple] = {}
        blocked: set[int] = set()
        tuples, enum = self._tuples(lo, hi)
        for args, v in tuples:
            if v < lo or v in witnesses:
                continue
            st = self._status(args)
            if st == "ok":
                witnesses[v] = tuple(args)
            elif st == "blocked":
                blocked.add(v)
        if not self.monotone and self.op.domain.kind != "set":
            for m in self.op.domain.within(lo, hi):
                if m in witnesses:
                    continue
                for args in self._solve_exact(m):
                    st = self._status(args)
                    if st == "ok":
                        witnesses[m] = args
                        break
                    if st == "blocked":
                        blocked.add(m)
        return witnesses, blocked, enum

    def complete(self, m: int, enum) -> bool:
        if self.op.domain.kind == "set":
            return True
        return enum is not None and m < enum.floor

    # deep search ------------------------------------------------------------

    def deep(self, lo: int, hi: int, depth: int) -> dict[int, Comb]:
        op = self.op
        r = self.bounds.witness_radius
        vals = _domain_values(op.domain, r)
        limit = max(r, abs(lo), abs(hi))
        level: dict[int, Comb] = {}
        for args in product(vals, repeat=op.arity):
            v = _value(op, args)
            if v is None or v is _HUGE or abs(v) > limit or v in level:
                continue
            if self._status(args) == "ok":
                level[v] = Comb(tuple(args), v)
        found = dict(level)
        for step in range(depth - 1):
            nxt: dict[int, Comb] = {}
            for p in range(op.arity):
                for sub_v, sub in sorted(found.items()):
                    for combo in product(vals, repeat=op.arity - 1):
                        args = list(combo[:p]) + [sub_v] + list(combo[p:])
                        v = _value(op, args)
                        if v is None or v is _HUGE or abs(v) > limit or v in found or v in nxt:
                            continue
                        tree = tuple(list(combo[:p]) + [sub] + list(combo[p:]))
                        nxt[v] = Comb(tree, v)
            if step == depth - 2 and op.arity == 2:
                # last level: solve the plain argument exactly when the section is affine
                for m in op.domain.within(lo, hi):
                    if m in found or m in nxt:
                        continue
                    hit = self._solve_around(found, m)
                    if hit is not None:
                        nxt[m] = hit
            found.update(nxt)
        return {v: c for v, c in found.items() if lo <= v <= hi}

    def _solve_around(self, subs: dict[int, Comb], m: int) -> Comb | None:
        op = self.op
        for p in (1, 0):
            for sub_v, sub in sorted(subs.items()):
                sec = affine_section(op, {p + 1: sub_v})
                if sec is None:
                    continue
                const, coeffs = sec
                c = coeffs[2 - p]
                if c == 0 or (m - const) % c:
                    continue
                b = (m - const) // c
                args = [b, b]
                args[p] = sub_v
                if b in op.domain and _value(op, args) == m:
                    tree = [b, b]
                    tree[p] = sub
                    return Comb(tuple(tree), m)
        return None

    # window -----------------------------------------------------------------

    def run(self, lo: int, hi: int) -> "SieveTable":
        op = self.op
        members = list(op.domain.within(lo, hi))
        codes = bytearray()
        proven = bytearray()
        witnesses: dict[int, Comb] = {}
        units: dict[int, tuple[Certified, ...]] = {}
        if isinstance(self.semantics, Deep):
            deep = self.deep(lo, hi, self.semantics.depth)
            found, blocked, enum = {}, set(), None
        else:
            found, blocked, enum = self.top_level(lo, hi)
            deep = {}
        th = self._thresholds
        # past every threshold the unit tests are all proven false
        fast_from = max(t[0] for t in th.values()) if len(th) == op.arity else None
        nonunit = tuple(th[j][1] for j in range(1, op.arity + 1)) if fast_from is not None else ()
        top = isinstance(self.semantics, TopLevel)
        for n in members:
            fast = fast_from is not None and n >= fast_from
            us = nonunit if fast else self.units_of(n)
            if not fast and any(u.value for u in us):
                codes.append(0)
                units[n] = us
                proven.append(all(u.proven for u in us if u.value))
                # a unit may still be a combination of non-units; keep it visible
                if n in found:
                    witnesses[n] = Comb(found[n], n)
                elif n in deep:
                    witnesses[n] = deep[n]
                continue
            us_proven = fast or all(u.proven for u in us)
            if n in found or n in deep:
                codes.append(1)
                witnesses[n] = deep[n] if n in deep else Comb(found[n], n)
                proven.append(top and us_proven
                              and all(self.unit(j, a).proven for j, a in enumerate(found[n], 1)))
                continue
            if n in blocked:
                codes.append(3)
                proven.append(0)
                continue
            codes.append(2)
            proven.append(top and us_proven and self.complete(n, enum))
        return SieveTable((lo, hi), op, self.bounds, self.semantics, tuple(members), codes,
                          proven, witnesses, units)


@dataclass
class SieveTable:
    """Verdicts for every domain element of a window.

    Stored compactly (one byte per entry); :class:`Classification` objects
    are built on access.  Units are never listed as primes.
    """

    window: tuple[int, int]
    op: OpSpec
    bounds: CertBounds
    semantics: Semantics
    members: tuple[int, ...]
    codes: bytearray
    proven: bytearray
    witnesses: dict[int, Comb] = field(default_factory=dict)
    units: dict[int, tuple[Certified, ...]] = field(default_factory=dict)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {n: k for k, n in enumerate(self.members)}

    def verdict(self, n: int) -> str:
        return _CODES[self.codes[self._index[n]]]

    def __getitem__(self, n: int) -> Classification:
        k = self._index[n]
        verdict = _CODES[self.codes[k]]
        us = self.units.get(n)
        if us is None:
            us = tuple(Certified(False, bool(self.proven[k])) for _ in range(self.op.arity))
        return Classification(n, verdict, us, self.witnesses.get(n), bool(self.proven[k]), self.bounds)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Classification]:
        return (self[n] for n in self.members)

    def select(self, verdict: str) -> list[int]:
        code = _CODES.index(verdict)
        return [n for n, c in zip(self.members, self.codes) if c == code]

    @property
    def primes(self) -> list[int]:
        return self.select(PRIME)

    @property
    def composites(self) -> list[int]:
        return self.select(COMPOSITE)

    @property
    def unit_elements(self) -> list[int]:
        return self.select(UNIT)

    @property
    def unknown(self) -> list[int]:
        return self.select(UNKNOWN)

    def notes(self) -> list[str]:
        out = []
        for n in self.unit_elements:
            sides = self.units[n]
            if self.op.arity == 2:
                names = [s for s, u in zip(("left", "right"), sides) if u.value]
                where = " and ".join(names) + "-unit"
            else:
                where = "unit in position(s) " + ", ".join(str(j + 1) for j, u in enumerate(sides) if u.value)
            note = f"{n} is a {where}; units are excluded from the prime list"
            if n in self.witnesses:
                note += f" (it also equals {self.witnesses[n]} with non-unit arguments)"
            out.append(note)
        return out

    def to_dict(self) -> dict:
        return {
            "op": self.op.text,
            "arity": self.op.arity,
            "domain": self.op.domain.describe(),
            "window": list(self.window),
            "semantics": str(self.semantics),
            "bounds": self.bounds.to_dict(),
            "primes": self.primes,
            "composites": self.composites,
            "units": self.unit_elements,
            "unknown": self.unknown,
            "notes": self.notes(),
            "entries": [c.to_dict() for c in self],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "verdict", "witness", "certification"])
        for c in self:
            w.writerow([c.n, c.verdict, json.dumps(c.witness.to_json()) if c.witness else "",
                        "proven" if c.proven else "bounded"])
        return buf.getvalue()

    @classmethod
    def merge(cls, parts: Sequence["SieveTable"]) -> "SieveTable":
        first = parts[0]
        members, codes, proven, wit, units = [], bytearray(), bytearray(), {}, {}
        for p in parts:
            members.extend(p.members)
            codes.extend(p.codes)
            proven.extend(p.proven)
            wit.update(p.witnesses)
            units.update(p.units)
        window = (parts[0].window[0], parts[-1].window[1])
        return cls(window, first.op, first.bounds, first.semantics, tuple(members), codes, proven, wit, units)


def _resolve(op: OpSpec, window: tuple[int, int], bounds: CertBounds | None,
             semantics: Semantics | None) -> tuple[CertBounds, Semantics]:
    semantics = semantics or TopLevel()
    depth = semantics.depth if isinstance(semantics, Deep) else 1
    return bounds or CertBounds.default(window, op.domain, depth), semantics


def _sieve_chunk(op: OpSpec, lo: int, hi: int, bounds: CertBounds, semantics: Semantics) -> SieveTable:
    return _Analyzer(op, bounds, semantics).run(lo, hi)


def sieve(op: OpSpec, window: tuple[int, int], bounds: CertBounds | None = None,
          semantics: Semantics | None = None, jobs: int = 1) -> SieveTable:
    """Classify every domain element of ``window``.

    With ``jobs > 1`` the window is split into contiguous chunks handled by
    worker processes; the bounds are fixed up front, so the merged table is
    identical to a single-process run.
    """
    lo, hi = window
    if hi < lo:
        raise ValueError("empty window")
    bounds, semantics = _resolve(op, window, bounds, semantics)
    if jobs <= 1 or hi - lo < 2 * jobs:
        return _sieve_chunk(op, lo, hi, bounds, semantics)
    step = -(-(hi - lo + 1) // jobs)
    cuts = [(a, min(a + step - 1, hi)) for a in range(lo, hi + 1, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_sieve_chunk, [op] * len(cuts), [c[0] for c in cuts],
                              [c[1] for c in cuts], [bounds] * len(cuts), [semantics] * len(cuts)))
    return SieveTable.merge(parts)


def classify(op: OpSpec, m: int, bounds: CertBounds | None = None,
             semantics: Semantics | None = None) -> Classification:
    if m not in op.domain:
        raise ValueError(f"{m} is not in the domain {op.domain.describe()}")
    return sieve(op, (m, m), bounds, semantics)[m]


def prime_set(op: OpSpec, window: tuple[int, int], bounds: CertBounds | None = None,
              semantics: Semantics | None = None, jobs: int = 1) -> DomainSpec:
    """The primes of a window as an explicit domain, ready to serve as the
    carrier of another operation."""
    return DomainSpec.explicit(sieve(op, window, bounds, semantics, jobs).primes)
