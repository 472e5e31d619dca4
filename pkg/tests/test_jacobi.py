import random

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from grothwitt import cyclotomic, jacobi
from grothwitt.acceptance import ABELIAN_SURFACES, elliptic_reps
from grothwitt.cyclotomic import CyclotomicNumber
from grothwitt.jacobi import GroupLaurentPoly, MonomialEigenvalue


def test_cyclotomic_polys_match_sympy():
    x = sympy.Symbol("x")
    for d in range(1, 40):
        want = sympy.Poly(sympy.cyclotomic_poly(d, x), x).all_coeffs()[::-1]
        assert list(cyclotomic.cyclotomic_poly(d)) == want


def test_cyclotomic_field_arithmetic():
    z = CyclotomicNumber.zeta_power(6, 1)
    assert z * z * z == CyclotomicNumber.of(6, -1)
    w = z + 3
    assert w * w.inverse() == CyclotomicNumber.of(6, 1)
    assert abs(w.to_complex() - (np.exp(2j * np.pi / 6) + 3)) < 1e-12


@given(st.integers(1, 12), st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=3))
def test_rank_matches_complex_rank(d, rows):
    mat = [[CyclotomicNumber.of(d, v) + CyclotomicNumber.zeta_power(d, i) * v for i, v in enumerate(r)] for r in rows]
    numeric = np.array([[c.to_complex() for c in r] for r in mat])
    assert cyclotomic.rank(mat) == np.linalg.matrix_rank(numeric, tol=1e-8)


def test_characters():
    reps = jacobi.reps_from_json(ABELIAN_SURFACES)
    f1, f2 = jacobi.char_from_eigenvalues(reps)
    assert str(f1) == "T3 + T2 + T1 + T1*T2*T3^-1"
    assert str(f2) == "S*T3 + T2 + T1 + S*T1*T2*T3^-1"
    (single,) = jacobi.char_from_eigenvalues([[MonomialEigenvalue(0, (1,))]])
    assert single == GroupLaurentPoly(1, 1, {(1,): (1,)})
    # ordinary elliptic pair {pi, q/pi} with basis (pi, q)
    (f,) = jacobi.char_from_eigenvalues([[MonomialEigenvalue(0, (1, 0)), MonomialEigenvalue(0, (-1, 1))]])
    assert f == GroupLaurentPoly(1, 2, {(1, 0): (1,), (-1, 1): (1,)})
    with pytest.raises(ValueError):
        jacobi.char_from_eigenvalues([[MonomialEigenvalue(0, (1,)), MonomialEigenvalue(0, (1, 0))]])


def test_jacobian_entries():
    mono = GroupLaurentPoly(1, 3, {(1, 1, -1): (1,)})
    assert mono.derivative(2) == GroupLaurentPoly(1, 3, {(1, 1, -2): (-1,)})
    const = GroupLaurentPoly(1, 2, {(0, 0): (5,)})
    assert all(e.is_zero() for e in jacobi.jacobian([const])[0])
    f1, _ = jacobi.char_from_eigenvalues(jacobi.reps_from_json(ABELIAN_SURFACES))
    assert f1.derivative(0) == GroupLaurentPoly(2, 3, {(0, 0, 0): (1, 0), (0, 1, -1): (1, 0)})


def test_witness_examples():
    fs = jacobi.char_from_eigenvalues(jacobi.reps_from_json(ABELIAN_SURFACES))
    v = jacobi.independence_witness(fs, trial_budget=0, points=[(-1, 1, 1)])
    assert (v.status, v.d) == ("independent", 2)
    assert [[str(c) for c in r] for r in v.matrix] == [["2", "0", "2"], ["0", "2", "-2"]]
    t1 = GroupLaurentPoly(1, 1, {(1,): (1,)})
    t1sq = GroupLaurentPoly(1, 1, {(2,): (1,)})
    assert jacobi.independence_witness([t1, t1sq]).status == "dependent"
    f = GroupLaurentPoly(1, 1, {(1,): (1,), (-1,): (1,)})
    v = jacobi.independence_witness([f], trial_budget=0, points=[(2,)])
    assert v.status == "independent" and str(v.matrix[0][0]) == "3/4"


def _random_family(rng, n, m, M):
    fs = []
    for _ in range(n):
        terms = {}
        for _ in range(3):
            e = tuple(rng.randint(-2, 2) for _ in range(m))
            terms[e] = tuple(rng.randint(0, 2) for _ in range(M))
        fs.append(GroupLaurentPoly(M, m, terms))
    return fs


def _unimodular(rng, m):
    U = sympy.eye(m)
    for _ in range(6):
        i, j = rng.sample(range(m), 2)
        U[i, :] = U[i, :] + rng.choice((-1, 1)) * U[j, :]
    return [[int(v) for v in U.row(i)] for i in range(m)]


@pytest.mark.parametrize("seed", range(8))
def test_monomial_substitution_keeps_verdict(seed):
    rng = random.Random(seed)
    fs = _random_family(rng, 2, 3, 2)
    U = _unimodular(rng, 3)
    v = jacobi.independence_witness(fs, trial_budget=20, seed=seed)
    w = jacobi.independence_witness([jacobi.substitute_monomial(f, U) for f in fs], trial_budget=20, seed=seed)
    assert (v.status == "independent") == (w.status == "independent")
    if v.status == "independent":
        assert jacobi.verify_witness(fs, v)


def test_lattice():
    reps = elliptic_reps(3)
    v = jacobi.lattice_dims(reps)
    assert v.dims == (2, 3, 4) and v.geometrically_independent
    dup = jacobi.lattice_dims([reps[0], reps[0]])
    assert dup.dims == (2, 2) and not dup.geometrically_independent
    # the engines agree: lattice-certified data also passes the Jacobian test
    assert jacobi.independence_witness(jacobi.char_from_eigenvalues(reps), trial_budget=100).status == "independent"
    with pytest.raises(ValueError):
        jacobi.lattice_dims([[MonomialEigenvalue(0, (1,))], [MonomialEigenvalue(0, (1, 0))]])


@given(st.lists(st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=1, max_size=2), min_size=1, max_size=4))
def test_lattice_dims_monotone(raw):
    reps = [[MonomialEigenvalue(0, tuple(e)) for e in rep] for rep in raw]
    dims = jacobi.lattice_dims(reps).dims
    assert all(b >= a for a, b in zip(dims, dims[1:]))
    # a representation inside the span of earlier ones adds nothing
    spanned = [MonomialEigenvalue(0, tuple(sum(r) for r in zip(*(e.free_exps for e in reps[0]))))]
    assert jacobi.lattice_dims(reps[:1] + [spanned]).dims[-1] == dims[0]


def test_reps_json_round_trip():
    reps = jacobi.reps_from_json(ABELIAN_SURFACES)
    assert jacobi.reps_from_json(jacobi.reps_to_json(reps)) == reps
