from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from grothwitt import skolem
from grothwitt.curves import motivic_measure, zeta_from_numerator
from grothwitt.errors import Inconclusive, InvalidInputError
from grothwitt.rational import MotivicMeasurePoly, OnePoly, WittRational, rw_ghost
from grothwitt import poly
from grothwitt.zerodim import measure_of_etale

P = skolem.IntPoly.parse


def test_ghost_zero_set_examples():
    g = skolem.ghost_zero_set(measure_of_etale(2), 50)
    assert (g.finite_part, g.modulus, g.residues) == (frozenset(), 2, frozenset({1}))
    g = skolem.ghost_zero_set(WittRational.zero(), 50)
    assert (g.finite_part, g.modulus, g.residues) == (frozenset(), 1, frozenset({0}))
    # (1 - t) - (1 - 2t): d_nu = 1 - 2^nu
    g = skolem.ghost_zero_set(WittRational.from_full([1, -1], [1, -2]), 50)
    assert (g.finite_part, g.modulus, g.residues) == (frozenset(), 1, frozenset())


def test_ghost_zero_set_errors():
    with pytest.raises(InvalidInputError):
        skolem.ghost_zero_set(measure_of_etale(20), 50)
    with pytest.raises(Inconclusive) as err:
        skolem.fit_good_set({50}, 50)
    assert err.value.data == [50]


def test_fit_prefers_small_modulus_and_finite_part():
    g = skolem.fit_good_set({1, 2, 4, 6, 8, 10}, 10)
    assert (g.finite_part, g.modulus, g.residues) == (frozenset({1}), 2, frozenset({0}))
    assert g.members() == [1, 2, 4, 6, 8, 10]


def _recurrence_replay(x: WittRational, horizon: int) -> list[Fraction]:
    """Extend the ghost sequence by the recurrence whose characteristic polynomial is rev(num * den)."""
    char = poly.mul(x.num.full(), x.den.full())  # 1 + c_1 t + ... ; d_nu = -sum c_i d_(nu - i)
    D = len(char) - 1
    seq = [rw_ghost(x, nu) for nu in range(1, D + 1)]
    while len(seq) < horizon:
        k = len(seq)
        seq.append(-sum(char[i] * seq[k - i] for i in range(1, D + 1)))
    return seq


small = st.lists(st.sampled_from([-2, -1, 1, 2]), min_size=0, max_size=2)


@given(small, small)
def test_zero_set_agrees_with_recurrence(num_roots, den_roots):
    x = WittRational.from_full(
        poly.power([1], 0) if not num_roots else _from_roots(num_roots),
        _from_roots(den_roots),
    )
    H = 40
    seq = _recurrence_replay(x, H)
    assert seq == [rw_ghost(x, nu) for nu in range(1, H + 1)]
    try:
        g = skolem.ghost_zero_set(x, H)
    except Inconclusive:
        return
    assert g.members() == [nu for nu in range(1, H + 1) if seq[nu - 1] == 0]


def _from_roots(roots):
    out = [Fraction(1)]
    for r in roots:
        out = poly.mul(out, [1, -r])
    return out


def test_localize_examples():
    e2 = measure_of_etale(2)
    loc = skolem.localize_irreducible_relation([e2], [P("T1"), P("T1 - 2")], 50)
    assert (loc.M, loc.index, str(loc.factor)) == (2, 2, "T1 - 2")
    loc = skolem.localize_irreducible_relation([MotivicMeasurePoly.one()], [P("T1 - 1")], 50)
    assert (loc.M, loc.index) == (1, 1)
    p1 = motivic_measure(zeta_from_numerator(4, [1]))
    e = motivic_measure(zeta_from_numerator(4, [1, 4, 4]))
    loc = skolem.localize_irreducible_relation([p1, e], [P("4*(T2 - T1)^2 - 16*T1 + 16")], 50)
    assert (loc.M, loc.index) == (1, 1)
    with pytest.raises(InvalidInputError):
        skolem.localize_irreducible_relation([e2], [P("T1 - 2")], 50)


def test_factor_univariate():
    assert sorted(str(f) for f in skolem.factor_univariate(P("T1^2 - 2*T1"))) == ["T1", "T1 - 2"]
    with pytest.raises(ValueError):
        skolem.factor_univariate(P("T1*T2"))
    with pytest.raises(InvalidInputError):
        P("T1/2")


def test_classifier_examples():
    p1, e_ord = zeta_from_numerator(2, [1]), zeta_from_numerator(2, [1, -1, 2])
    assert skolem.classify_two_curves(p1, e_ord).case == "IndependentCertified"
    p1_4, e_ss = zeta_from_numerator(4, [1]), zeta_from_numerator(4, [1, 4, 4])
    v = skolem.classify_two_curves(p1_4, e_ss)
    assert v.case == "BecomesSpecialBoth"
    assert dict(v.diagnostics)["candidate relation vanishes on ghosts"]
    assert str(skolem.classify_two_curves(e_ss, e_ss)) == "IsogenousJacobians(1)"
    with pytest.raises(ValueError):
        skolem.classify_two_curves(p1, p1_4)


def test_isogeny_after_extension():
    # quadratic twists become isogenous over the quadratic extension
    twist1, twist2 = zeta_from_numerator(5, [1, 2, 5]), zeta_from_numerator(5, [1, -2, 5])
    v = skolem.classify_two_curves(twist1, twist2)
    assert (v.case, v.M) == ("IsogenousJacobians", 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_classifier_is_symmetric(q):
    a = 0
    nums = []
    while a * a <= 4 * q:
        nums += [[1, a, q], [1, -a, q]]
        a += 1
    nums.append([1])
    zs = [zeta_from_numerator(q, n) for n in nums]
    for z1 in zs:
        for z2 in zs[:6]:
            v, w = skolem.classify_two_curves(z1, z2), skolem.classify_two_curves(z2, z1)
            assert (v.case, v.M) == (w.case, w.M)


def test_parse_numerator():
    assert skolem.parse_numerator("") == [1]
    assert skolem.parse_numerator("0,2") == [1, 0, 2]
    assert skolem.parse_numerator("1,−1,2") == [1, -1, 2]
    with pytest.raises(InvalidInputError):
        skolem.parse_numerator("2,0,2")
