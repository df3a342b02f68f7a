"""Prime combinations, representation counts and L-series partial sums.

``F_f`` is built from units and primes of ``f`` by combining non-unit
elements; ``T_AC`` keeps one element per class modulo associativity and
commutativity, taken here as the left-nested combination of a sorted prime
multiset.  ``c_i`` counts elements of value ``i``, and

    L(s) = sum c_i / i^s,    zeta(s) = sum 1 / i^s,    R(s) = L(s) - zeta(s)

are compared at a truncation ``N`` (exactly when ``s`` is an integer).
"""

from __future__ import annotations

import csv
import io
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence, Union

import mpmath

from .genprime import Certified, CertBounds, _monotone, _value, sieve
from .opexpr import OpSpec

FLOAT_DIGITS = 50


@dataclass(frozen=True)
class CombElement:
    """A leaf (``tree`` is an int) or an application ``(left, right)``."""

    tree: Union[int, tuple["CombElement", "CombElement"]]
    value: int
    size: int = 1

    @classmethod
    def leaf(cls, v: int) -> "CombElement":
        return cls(v, v, 1)

    @property
    def is_leaf(self) -> bool:
        return isinstance(self.tree, int)

    def __str__(self) -> str:
        if self.is_leaf:
            return str(self.tree)
        left, right = self.tree
        return f"({left} o {right})"


def _leaves(op: OpSpec, value_cutoff: int, leaves: Iterable[int] | None) -> tuple[list[int], list[int]]:
    """(units, primes) of ``op`` up to the cutoff, or the given leaves as primes."""
    if leaves is not None:
        return [], sorted(set(leaves))
    lo = op.domain.minimum if op.domain.minimum is not None else 1
    table = sieve(op, (max(lo, 1), value_cutoff))
    return table.unit_elements, table.primes


def gen_F(op: OpSpec, value_cutoff: int, size_cutoff: int,
          leaves: Iterable[int] | None = None) -> Iterator[CombElement]:
    """Every combination with at most ``size_cutoff`` leaves and value at
    most ``value_cutoff``, by increasing size.

    Units appear only as single leaves; combinations join non-unit elements.
    Distinct trees with equal values are all produced.
    """
    if op.arity != 2:
        raise ValueError("prime combinations are built from a binary operation")
    units, primes = _leaves(op, value_cutoff, leaves)
    by_size: dict[int, list[CombElement]] = {1: [CombElement.leaf(p) for p in primes]}
    for u in units:
        yield CombElement.leaf(u)
    yield from by_size[1]
    for size in range(2, size_cutoff + 1):
        level = []
        for ls in range(1, size):
            for left in by_size[ls]:
                for right in by_size[size - ls]:
                    v = _value(op, (left.value, right.value))
                    if isinstance(v, int) and v <= value_cutoff:
                        level.append(CombElement((left, right), v, size))
        by_size[size] = level
        yield from level


@dataclass(frozen=True)
class ACReport:
    commutative: Certified
    associative: Certified
    commutative_counterexample: tuple[int, int] | None = None
    associative_counterexample: tuple[int, int, int] | None = None

    def to_dict(self) -> dict:
        return {"commutative": self.commutative.to_dict(), "associative": self.associative.to_dict(),
                "commutative_counterexample": self.commutative_counterexample,
                "associative_counterexample": self.associative_counterexample}


def assoc_comm_probe(op: OpSpec, sample_bound: int) -> ACReport:
    """Exhaustive check of ``a o b = b o a`` and ``(a o b) o c = a o (b o c)``
    for arguments within ``sample_bound``; comparisons involving undefined
    values only require both sides to be undefined."""
    vals = list(op.domain.elements if op.domain.kind == "set" else op.domain.candidates(sample_bound))
    vals = [v for v in vals if abs(v) <= sample_bound] if op.domain.kind == "set" else vals
    bounds = CertBounds((min(vals), max(vals)), sample_bound)
    f = {}

    def ev(a, b):
        key = (a, b)
        if key not in f:
            v = _value(op, (a, b))
            f[key] = v if isinstance(v, int) else None
        return f[key]

    comm_cx = next(((a, b) for a, b in product(sorted(vals), repeat=2) if ev(a, b) != ev(b, a)), None)
    assoc_cx = None
    for a, b, c in product(sorted(vals), repeat=3):
        ab, bc = ev(a, b), ev(b, c)
        lhs = None if ab is None else ev(ab, c)
        rhs = None if bc is None else ev(a, bc)
        if lhs != rhs:
            assoc_cx = (a, b, c)
            break
    return ACReport(Certified(comm_cx is None, comm_cx is not None, bounds),
                    Certified(assoc_cx is None, assoc_cx is not None, bounds),
                    comm_cx, assoc_cx)


def gen_TAC(op: OpSpec, value_cutoff: int, size_cutoff: int | None = None,
            leaves: Iterable[int] | None = None, assume_ac: bool = False,
            sample_bound: int = 12) -> list[CombElement]:
    """One element per AC class: units and primes, then left-nested
    combinations of sorted prime multisets of size >= 2.

    Runs :func:`assoc_comm_probe` first unless ``assume_ac``; a failed probe
    raises ``ValueError``.  For monotone ops, multisets whose partial value
    exceeds the cutoff are pruned.
    """
    if op.arity != 2:
        raise ValueError("prime combinations are built from a binary operation")
    if not assume_ac:
        rep = assoc_comm_probe(op, sample_bound)
        if not (rep.commutative.value and rep.associative.value):
            raise ValueError(f"operation {op.text} is not associative and commutative "
                             f"(counterexamples: {rep.commutative_counterexample}, "
                             f"{rep.associative_counterexample})")
    units, primes = _leaves(op, value_cutoff, leaves)
    if size_cutoff is None:
        size_cutoff = max(1, value_cutoff)
    monotone = _monotone(op)
    out = [CombElement.leaf(u) for u in units] + [CombElement.leaf(p) for p in primes]

    # depth-first over multisets p_1 <= p_2 <= ..., each extended on the right
    stack = [(CombElement.leaf(p), idx) for idx, p in reversed(list(enumerate(primes)))]
    while stack:
        elem, start = stack.pop()
        if elem.size > 1:
            out.append(elem)
        if elem.size >= size_cutoff:
            continue
        children = []
        for idx in range(start, len(primes)):
            p = primes[idx]
            v = _value(op, (elem.value, p))
            if not isinstance(v, int) or v > value_cutoff:
                if monotone and v is not None:
                    break
                continue
            children.append((CombElement((elem, CombElement.leaf(p)), v, elem.size + 1), idx))
        stack.extend(reversed(children))
    return out


@dataclass(frozen=True)
class CoeffTable:
    cutoff: int
    counts: dict[int, int]
    source: str = "F"

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.cutoff:
            raise KeyError(i)
        return self.counts.get(i, 0)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "c_i"])
        for i in range(1, self.cutoff + 1):
            w.writerow([i, self.counts.get(i, 0)])
        return buf.getvalue()


def coeff_table(elements: Iterable[CombElement | int], N: int, source: str = "F") -> CoeffTable:
    """``c_i`` = number of elements of value ``i`` for ``1 <= i <= N``."""
    c = Counter(e.value if isinstance(e, CombElement) else e for e in elements)
    return CoeffTable(N, {i: n for i, n in sorted(c.items()) if 1 <= i <= N}, source)


@dataclass(frozen=True)
class SeriesPoint:
    s: object
    N: int
    value: object
    exact: bool
    tail_bound: object

    def to_dict(self) -> dict:
        if self.exact:
            val = {"numerator": str(self.value.numerator), "denominator": str(self.value.denominator),
                   "approx": mpmath.nstr(mpmath.mpf(self.value.numerator) / self.value.denominator, 20)}
        else:
            val = {"approx": mpmath.nstr(self.value, FLOAT_DIGITS)}
        return {"s": str(self.s), "N": self.N, "value": val, "exact": self.exact,
                "zeta_tail_bound": mpmath.nstr(_mpf(self.tail_bound), 20)}


def _mpf(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


def _check_s(s) -> None:
    if (s <= 1) if not isinstance(s, str) else (mpmath.mpf(s) <= 1):
        raise ValueError("series are evaluated only for s > 1")


def _is_int(s) -> bool:
    return isinstance(s, int) or (isinstance(s, Fraction) and s.denominator == 1)


def _series(coeffs: Sequence[tuple[int, int]], s, N: int) -> SeriesPoint:
    _check_s(s)
    if _is_int(s):
        s = int(s)
        # one common denominator keeps the sum a single big-integer pass
        d = math.lcm(*range(1, N + 1)) ** s
        total = sum(c * (d // i ** s) for i, c in coeffs if c)
        tail = Fraction(1, (s - 1) * N ** (s - 1))
        return SeriesPoint(s, N, Fraction(total, d), True, tail)
    with mpmath.workdps(FLOAT_DIGITS):
        sv = _mpf(s)
        value = mpmath.fsum(c * mpmath.power(i, -sv) for i, c in coeffs if c)
        tail = mpmath.power(N, 1 - sv) / (sv - 1)
    return SeriesPoint(s, N, value, False, tail)


def lseries_partial(table: CoeffTable, s, N: int | None = None) -> SeriesPoint:
    N = table.cutoff if N is None else N
    if N > table.cutoff:
        raise ValueError("N exceeds the table cutoff")
    return _series([(i, table.counts.get(i, 0)) for i in range(1, N + 1)], s, N)


def zeta_partial(s, N: int) -> SeriesPoint:
    return _series([(i, 1) for i in range(1, N + 1)], s, N)


def defect_partial(table: CoeffTable, s, N: int | None = None) -> SeriesPoint:
    """Partial uniqueness defect ``sum (c_i - 1) / i^s``."""
    N = table.cutoff if N is None else N
    if N > table.cutoff:
        raise ValueError("N exceeds the table cutoff")
    return _series([(i, table.counts.get(i, 0) - 1) for i in range(1, N + 1)], s, N)


def element_sum(elements: Iterable[CombElement], s: int) -> Fraction:
    """``sum 1/t^s`` over the elements one by one (exact, integer ``s``)."""
    _check_s(s)
    return sum((Fraction(1, e.value ** s) for e in elements), Fraction(0))
