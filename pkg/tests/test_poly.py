from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from grothwitt import poly

from conftest import rationals

polys = st.lists(rationals(), min_size=0, max_size=6)


def _sym(a):
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in a])) or [0], x)


@given(polys, polys)
def test_mul_matches_sympy(a, b):
    got = poly.mul(a, b)
    want = _sym(a) * _sym(b)
    assert _sym(got).as_expr() == want.as_expr()


@given(polys, polys.filter(lambda b: poly.trim(b)))
def test_divmod_reconstructs(a, b):
    q, r = poly.divmod_poly(a, b)
    assert poly.add(poly.mul(q, b), r) == poly.trim(poly.fracs(a))
    assert poly.degree(r) < poly.degree(b)


@given(polys, polys)
def test_xgcd_bezout(a, b):
    g, s, t = poly.xgcd(a, b)
    assert poly.add(poly.mul(s, a), poly.mul(t, b)) == g


def test_power_sums_of_known_roots():
    # (1 - t)(1 - 2t) has inverse roots 1, 2
    assert poly.power_sums([1, -3, 2], 4) == [3, 5, 9, 17]
    assert poly.from_power_sums([3, 5, 9, 17], 4) == [1, -3, 2, 0, 0]


@given(st.lists(rationals(50), min_size=1, max_size=10))
def test_newton_round_trip(c):
    c = [Fraction(1)] + c
    n = len(c) - 1
    assert poly.from_power_sums(poly.power_sums(c, n), n) == c


def test_format():
    assert poly.format_poly([1, -3, 2]) == "1 - 3*t + 2*t^2"
    assert poly.format_poly([0, 1], var="T") == "T"


def test_gcd_high_degree():
    a = poly.power([1] + [0] * 23 + [-1], 3)
    b = poly.power([1] + [0] * 11 + [-1], 2)
    assert poly.gcd(a, b) == poly.monic(b)
    assert poly.gcd([], [2, 4]) == [Fraction(1, 2), 1]
