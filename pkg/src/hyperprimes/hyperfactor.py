"""Exponential primes and the unique level-3 factorization.

Every ``n >= 2`` is written uniquely as a nested tower of terms ``(q, b)``
with ``q`` an exponential prime (not a perfect power) and ``b >= 1``::

    n = q1^(q1^(b1-1) * t2),   t2 = value of the remaining terms (1 if none)

with the side condition that ``q_k`` does not divide ``t_{k+1}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator

from sympy import factorint

from .opexpr import DEFAULT_MAX_BITS, guarded_pow


def factor_usual(n: int) -> list[tuple[int, int]]:
    """Prime factorization as ``[(p, e), ...]`` with ``p`` increasing."""
    if n < 1:
        raise ValueError("factor_usual needs n >= 1")
    return sorted((int(p), int(e)) for p, e in factorint(n).items())


def is_exp_prime(q: int) -> bool:
    """``q`` is not ``u^v`` with ``u, v > 1``; equivalently the exponents of
    its prime factorization have gcd 1.  ``1`` qualifies vacuously."""
    if q < 1:
        raise ValueError("exponential primality is defined for q >= 1")
    if q == 1:
        return True
    return math.gcd(*(e for _, e in factor_usual(q))) == 1


def is_exp_prime_bf(q: int, bound: int | None = None) -> bool:
    """Direct search for ``q = u^v`` over ``u in [2, isqrt(q)]``, ``v >= 2``.

    ``bound`` caps ``u`` (default: no cap beyond ``isqrt(q)``).
    """
    if q < 1:
        raise ValueError("exponential primality is defined for q >= 1")
    top = math.isqrt(q) if bound is None else min(bound, math.isqrt(q))
    for u in range(2, top + 1):
        p = u * u
        while p < q:
            p *= u
        if p == q:
            return False
    return True


def perfect_power_table(limit: int) -> bytearray:
    """``table[m] == 1`` iff ``m <= limit`` is ``u^v`` with ``u, v >= 2``."""
    table = bytearray(limit + 1)
    for u in range(2, math.isqrt(limit) + 1):
        p = u * u
        while p <= limit:
            table[p] = 1
            p *= u
    return table


@dataclass(frozen=True)
class HyperFactorization:
    """Ordered ``(q, b)`` terms, outermost first.

    Level 3 is the tower form above; level 2 lists usual primes with
    exponents; level 1 is the degenerate ``n = 0 + n o1 1`` with the single
    term ``(1, n)``.
    """

    level: int
    terms: tuple[tuple[int, int], ...]
    degenerate: bool = False

    def __post_init__(self):
        if self.level not in (1, 2, 3):
            raise ValueError("levels 1, 2 and 3 only")
        object.__setattr__(self, "terms", tuple((int(q), int(b)) for q, b in self.terms))
        if any(b < 1 for _, b in self.terms):
            raise ValueError("every b must be at least 1")

    def __str__(self) -> str:
        if self.level == 1:
            return f"0 + {self.terms[0][1]}*1"
        if self.level == 2:
            return " * ".join(f"{q}^{b}" if b > 1 else str(q) for q, b in self.terms)
        return " ".join(f"({q},{b})" for q, b in self.terms)


def recompose(hf: HyperFactorization, max_bits: int = DEFAULT_MAX_BITS) -> int:
    if hf.level == 1:
        return 0 + hf.terms[0][1] * 1
    if hf.level == 2:
        return math.prod(guarded_pow(q, b, max_bits) for q, b in hf.terms)
    return _tower_value(hf.terms, max_bits)


def _tower_value(terms, max_bits: int = DEFAULT_MAX_BITS) -> int:
    value = 1
    for q, b in reversed(terms):
        value = guarded_pow(q, guarded_pow(q, b - 1, max_bits) * value, max_bits)
    return value


def hyper_factorize(n: int, i: int = 3) -> HyperFactorization:
    """Constructive factorization at level ``i`` in ``{1, 2, 3}``.

    Level 3: ``g`` = gcd of the exponents of ``n``, ``q`` = ``n^(1/g)``
    (an exponential prime), ``beta`` = largest power with ``q^beta | g``;
    emit ``(q, beta + 1)`` and continue with ``g / q^beta``.
    """
    if n < 2:
        raise ValueError("hyper_factorize needs n >= 2")
    if i == 1:
        return HyperFactorization(1, ((1, n),), degenerate=True)
    fac = factor_usual(n)
    if i == 2:
        return HyperFactorization(2, tuple(fac))
    if i != 3:
        raise ValueError("levels 1, 2 and 3 only")
    terms = []
    while True:
        g = reduce(math.gcd, (e for _, e in fac))
        q = math.prod(p ** (e // g) for p, e in fac)
        beta = 0
        while g % q == 0:
            g //= q
            beta += 1
        terms.append((q, beta + 1))
        if g == 1:
            break
        fac = factor_usual(g)
    return HyperFactorization(3, tuple(terms))


def side_conditions_hold(hf: HyperFactorization) -> bool:
    """``q_k`` does not divide the value of the terms after it (level 3)."""
    if hf.level != 3:
        return True
    for k, (q, _) in enumerate(hf.terms[:-1]):
        if _tower_value(hf.terms[k + 1:]) % q == 0:
            return False
    return True


def enumerate_hyper3_reps(n: int, component_bound: int) -> list[HyperFactorization]:
    """Every tower representation of ``n`` with exponential primes
    ``2 <= q <= component_bound`` and ``1 <= b <= component_bound``.

    Independent of :func:`hyper_factorize`: for each candidate ``q`` it
    solves ``q^E = n`` by repeated division, then splits ``E`` as
    ``q^(b-1) * t`` and recurses on ``t`` with ``q`` not dividing ``t``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    return [HyperFactorization(3, terms) for terms in _reps(n, component_bound)]


def _reps(n: int, bound: int) -> Iterator[tuple[tuple[int, int], ...]]:
    for q in range(2, min(n, bound) + 1):
        if not is_exp_prime_bf(q):
            continue
        m, e = n, 0
        while m % q == 0:
            m //= q
            e += 1
        if m != 1 or e == 0:
            continue
        qb = 1
        for b in range(1, bound + 1):
            if e % qb:
                break
            t = e // qb
            if t == 1:
                yield ((q, b),)
            elif t % q:
                for rest in _reps(t, bound):
                    yield ((q, b),) + rest
            qb *= q
