import itertools

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from grothwitt.errors import BudgetExceeded
from grothwitt.ff import FieldSpec, field_make

FIELDS = [(2, 1), (2, 2), (2, 3), (3, 2), (5, 1), (5, 2), (7, 1), (2, 4)]


def test_moduli():
    assert field_make(2, 1).modulus == (1, 1)
    assert field_make(2, 2).modulus == (1, 1, 1)
    assert field_make(3, 2).modulus == (1, 0, 1)
    with pytest.raises(ValueError):
        field_make(4, 1)
    with pytest.raises(BudgetExceeded):
        field_make(2, 20, budget=1000)


def test_gf4_traces_and_generator():
    F = field_make(2, 2)
    assert [F.trace(a) for a in range(4)] == [0, 0, 1, 1]
    assert field_make(5).generator == 2


def test_inverse_exhaustive_gf9():
    F = field_make(3, 2)
    assert all(F.mul(a, F.inv(a)) == 1 for a in range(1, 9))
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


@pytest.mark.parametrize("p,n", FIELDS)
def test_mul_matches_sympy(p, n):
    F = field_make(p, n)
    x = sympy.Symbol("x")
    mod = sympy.Poly(list(reversed(F.modulus)), x, modulus=p)
    for a, b in itertools.product(range(F.q), repeat=2):
        if a * b % 7:  # thin the grid on bigger fields
            continue
        pa = sympy.Poly(list(reversed(F.coeffs(a))), x, modulus=p)
        pb = sympy.Poly(list(reversed(F.coeffs(b))), x, modulus=p)
        want = (pa * pb).rem(mod)
        got = sympy.Poly(list(reversed(F.coeffs(F.mul(a, b)))), x, modulus=p)
        assert got == want


@pytest.mark.parametrize("p,n", FIELDS)
def test_frobenius_trace_generator(p, n):
    F = field_make(p, n)
    elems = range(F.q)
    fixed = [a for a in elems if F.frobenius(a) == a]
    assert fixed == list(range(p))  # GF(p) sits in the codes 0..p-1
    for a, b in itertools.product(range(min(F.q, 30)), repeat=2):
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
        assert F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % p
    fibres = np.bincount([F.trace(a) for a in elems], minlength=p)
    assert list(fibres) == [p ** (n - 1)] * p
    assert F.order(F.generator) == F.q - 1


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 4)])
def test_tables_agree_with_scalar_ops(p, n):
    F = field_make(p, n)
    a = np.arange(F.q)
    b = (a * 5 + 3) % F.q
    assert list(F.vmul(a, b)) == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert list(F.vadd(a, b)) == [F.add(int(x), int(y)) for x, y in zip(a, b)]
    assert list(F.trace_table) == [F.trace(x) for x in range(F.q)]
    assert F.exp_table[F.log_table[5 % F.q or 1]] == (5 % F.q or 1)


def test_embedding_is_a_ring_map():
    F4, F16 = field_make(2, 2), field_make(2, 4)
    r = F16.embedding_root(F4)
    for a, b in itertools.product(range(4), repeat=2):
        assert F16.embed(F4, F4.mul(a, b), r) == F16.mul(F16.embed(F4, a, r), F16.embed(F4, b, r))
        assert F16.embed(F4, F4.add(a, b), r) == F16.add(F16.embed(F4, a, r), F16.embed(F4, b, r))
    with pytest.raises(ValueError):
        field_make(2, 3).embedding_root(F4)


@given(st.sampled_from(FIELDS), st.integers(0, 10**6), st.integers(0, 50))
def test_pow_matches_repeated_mul(field, a, e):
    F = field_make(*field)
    a %= F.q
    acc = 1
    for _ in range(e):
        acc = F.mul(acc, a)
    assert F.pow(a, e) == acc


def test_json_round_trip():
    F = field_make(3, 2)
    assert FieldSpec.from_json(F.to_json()) == F
    with pytest.raises(ValueError):
        FieldSpec(2, 2, [1, 0, 1])  # x^2 + 1 = (x + 1)^2 over GF(2)
