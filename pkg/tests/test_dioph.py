from hypothesis import given, settings, strategies as st

from hyperprimes.dioph import (SolutionBox, composite_intersection, cover_scan, four_squares, goldbach,
                               is_trivial_in, prime_cover_check, representable, representable_scan, solve_box)
from hyperprimes.genprime import CertBounds
from hyperprimes.opexpr import DomainSpec, parse_op_expr


def sq():
    return parse_op_expr("x^2+y^2", 2), parse_op_expr("z^2", 1)


def test_pythagorean_triples():
    f, g = sq()
    recs = solve_box(f, g, SolutionBox.cube(1, 15, 2, 1))
    assert (3, 4, 5) in [r.assignment for r in recs]
    assert all(r.nowhere_trivial for r in recs)
    assert [r.assignment for r in recs] == sorted(r.assignment for r in recs)


def test_cubes_have_no_solutions():
    f, g = parse_op_expr("x^3+y^3", 2), parse_op_expr("z^3", 1)
    assert solve_box(f, g, SolutionBox.cube(1, 40, 2, 1)) == []


def test_trivial_solutions():
    f = parse_op_expr("x+y", 2, domain=DomainSpec("n0"))
    assert is_trivial_in(f, (0, 5), 1).value
    fz = parse_op_expr("x*y", 2, domain=DomainSpec("z"))
    assert not is_trivial_in(fz, (2, 5), 1).value


def test_intersections():
    f, g = sq()
    inter = composite_intersection(f, g, (1, 100))
    assert inter[25] == ((3, 4), (5,))
    assert sorted(inter) == [25, 100]
    cubes = composite_intersection(parse_op_expr("x^3+y^3", 2), parse_op_expr("z^3", 1), (1, 10 ** 4),
                                   CertBounds((1, 10 ** 4), 100))
    assert cubes == {}


def test_prime_cover():
    f, g = sq()
    rep = prime_cover_check(f, g, (1, 100))
    assert not rep.covered and rep.exceptions == (25, 100) and rep.consistent
    rep = prime_cover_check(parse_op_expr("x^3+y^3", 2), parse_op_expr("z^3", 1), (1, 3000))
    assert rep.covered and rep.consistent


def test_representable():
    f = parse_op_expr("x1^2+x2^2+x3^2+x4^2", 4, domain=DomainSpec("n0"))
    assert representable(f, 7) == (1, 1, 1, 2)
    assert representable(parse_op_expr("x^2+y^2", 2), 3) is None


def test_four_squares_matches_brute_force():
    reps = four_squares(200)
    for n in range(1, 201):
        expected = next(t for t in ((a, b, c, d) for a in range(15) for b in range(15) for c in range(15)
                                    for d in range(15)) if sum(v * v for v in t) == n)
        assert reps[n] == expected


def test_cover_scan_classical_goldbach():
    primes = [p for p in range(2, 1000) if all(p % d for d in range(2, int(p ** 0.5) + 1))]
    assert cover_scan(primes, parse_op_expr("x+y", 2, domain=DomainSpec("z")), (4, 998), step=2) == []
    assert cover_scan([1], parse_op_expr("x+y", 2, domain=DomainSpec("z")), (2, 5)) == [3, 4, 5]


def test_goldbach_variant():
    rep = goldbach(parse_op_expr("x^2+y^2", 2), (4, 3000))
    assert rep.failures == ()


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 400))
def test_representable_witness_is_valid(n):
    f = parse_op_expr("x^2+y^2+z^2", 3, domain=DomainSpec("n0"))
    w = representable_scan(f, n, n)[n]
    if w is not None:
        assert sum(v * v for v in w) == n
    else:
        # Legendre: sums of three squares miss exactly 4^a(8b+7)
        m = n
        while m % 4 == 0:
            m //= 4
        assert m % 8 == 7
