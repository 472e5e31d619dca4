from fractions import Fraction

from hypothesis import given, strategies as st

from grothwitt import witt
from grothwitt.curves import motivic_measure, zeta_from_numerator
from grothwitt.rational import (
    MotivicMeasurePoly,
    OnePoly,
    WittRational,
    measure_frobenius,
    measure_ghost,
    measure_ghosts,
    measure_mul,
    measure_power,
    measure_verschiebung,
    poly_witt_mul,
    rw_add,
    rw_equal,
    rw_ghost,
    rw_mul,
)
from grothwitt.zerodim import measure_of_etale

from conftest import rationals

W = WittRational.from_full
small_polys = st.lists(rationals(6), min_size=0, max_size=3).map(OnePoly)
witt_rationals = st.builds(WittRational, small_polys, small_polys)


def test_add_examples():
    assert rw_add(W([1, 0, -1], [1, -1]), WittRational.zero()) == W([1, 1])
    a, b = Fraction(2), Fraction(-5, 3)
    assert rw_add(W([1, -a]), W([1, -b])) == W([1, -(a + b), a * b])
    x = W([1, 2, 3], [1, -7])
    assert rw_add(x, -x).is_zero()


def test_mul_examples():
    assert rw_mul(W([1, -2]), W([1, -3])) == W([1, -6])
    x = W([1, 2, 3], [1, -7])
    assert rw_mul(WittRational.one(), x) == x
    assert rw_mul(W([1, -3, 2]), W([1, -3])) == W([1, -9, 18])


def test_poly_witt_mul_examples():
    a, b = Fraction(3, 4), Fraction(-2)
    assert poly_witt_mul(OnePoly((-a,)), OnePoly((-b,))) == OnePoly((-a * b,))
    f = OnePoly((5, -1, 2))
    assert poly_witt_mul(f, OnePoly((-1,))) == f
    assert poly_witt_mul(OnePoly((-3, 2)), OnePoly((-3,))) == OnePoly((-9, 18))


def test_ghost_and_equality_examples():
    a = Fraction(5, 2)
    assert [rw_ghost(W([1, -a]), nu) for nu in (1, 2, 3)] == [a, a**2, a**3]
    assert rw_ghost(WittRational.zero(), 4) == 0
    assert rw_ghost(W([1], [1, -a]), 3) == -(a**3)
    assert rw_equal(W([1, 0, -1], [1, -1]), W([1, 1]))
    assert not rw_equal(W([1, -2]), W([1, -3]))


@given(witt_rationals, witt_rationals)
def test_agrees_with_truncated_series(x, y):
    n = 32
    fx, fy = x.series(n), y.series(n)
    assert rw_add(x, y).series(n) == witt.lambda_add(fx, fy)
    assert rw_mul(x, y).series(n) == witt.lambda_mul(fx, fy)


@given(witt_rationals)
def test_identity_laws(x):
    assert rw_equal(rw_add(x, WittRational.zero()), x)
    assert rw_equal(rw_mul(x, WittRational.one()), x)


@given(witt_rationals, witt_rationals)
def test_ghosts_separate(x, y):
    bound = x.num.degree + x.den.degree + y.num.degree + y.den.degree
    same = all(rw_ghost(x, nu) == rw_ghost(y, nu) for nu in range(1, bound + 1))
    assert same == rw_equal(x, y)


def test_measure_examples():
    p1 = motivic_measure(zeta_from_numerator(2, [1]))
    assert measure_mul(p1, MotivicMeasurePoly.one()) == p1
    point = MotivicMeasurePoly.one()
    assert measure_mul(point, point) == point
    sq = measure_power(p1, 2)
    assert sq.weight_degree == 4
    for nu, g in enumerate(measure_ghosts(sq, 6), start=1):
        assert sum(g) == (2**nu + 1) ** 2
    assert measure_ghost(p1, 3) == [1, 0, 8]
    assert measure_ghost(MotivicMeasurePoly(), 2) == []
    e2 = measure_of_etale(2)
    assert [sum(measure_ghost(e2, nu)) for nu in range(1, 7)] == [0, 2, 0, 2, 0, 2]


def test_measure_frobenius_verschiebung():
    p1_2 = motivic_measure(zeta_from_numerator(2, [1]))
    p1_4 = motivic_measure(zeta_from_numerator(4, [1]))
    assert measure_frobenius(p1_2, 2) == p1_4
    expected = MotivicMeasurePoly((W([1, 0, -1]), WittRational.zero(), W([1, 0, -4])))
    assert measure_verschiebung(p1_4, 2) == expected


@given(st.integers(-3, 3), st.integers(1, 4))
def test_frobenius_shifts_ghosts(a, M):
    m = motivic_measure(zeta_from_numerator(3, [1, a, 3]))
    FM = measure_frobenius(m, M)
    for nu in range(1, 6):
        assert measure_ghost(FM, nu) == measure_ghost(m, nu * M)
