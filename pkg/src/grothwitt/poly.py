"""Dense univariate polynomials over the rationals.

A polynomial is a list of coefficients in ascending degree order, constant
term first.  Helpers return trimmed lists (no trailing zeros); the zero
polynomial is ``[]``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import sympy
from gmpy2 import mpq as _fast_q

_X = sympy.Symbol("x")

Poly = list  # list[Fraction]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip().replace("−", "-"))
    return Fraction(x)


def fracs(xs: Iterable) -> list[Fraction]:
    return [to_fraction(x) for x in xs]


def trim(a: Sequence) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: Sequence) -> int:
    """Degree of a trimmed polynomial, -1 for zero."""
    return len(trim(a)) - 1


def add(a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def neg(a: Sequence) -> list:
    return [-c for c in a]


def sub(a: Sequence, b: Sequence) -> list:
    return add(a, neg(b))


def scale(a: Sequence, s) -> list:
    return trim([c * s for c in a])


def mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def mul_trunc(a: Sequence, b: Sequence, n: int) -> list:
    """Product truncated to the coefficients of t^0 .. t^(n-1); not trimmed."""
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if x == 0:
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return out


def divmod_poly(a: Sequence, b: Sequence) -> tuple[list, list]:
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [to_fraction(c) for c in trim(a)]
    lead = to_fraction(b[-1])
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    q = [Fraction(0)] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] / lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] -= c * y
    return trim(q), trim(r[:db])


def exact_div(a: Sequence, b: Sequence) -> list:
    q, r = divmod_poly(a, b)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


def monic(a: Sequence) -> list:
    a = trim(a)
    return [c / a[-1] for c in a] if a else []


def _sympy_poly(a: list):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(a)], _X, domain="QQ")


def gcd(a: Sequence, b: Sequence) -> list:
    """Greatest common divisor over Q, made monic."""
    a, b = trim(fracs(a)), trim(fracs(b))
    if not a or not b:
        return monic(a or b)
    if len(a) <= 4 or len(b) <= 4:
        while b:
            a, b = b, divmod_poly(a, b)[1]
        return monic(a)
    # plain Euclid over Q suffers coefficient blow-up at high degree; sympy's gcd does not
    g = _sympy_poly(a).gcd(_sympy_poly(b))
    return monic([Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())])


def xgcd(a: Sequence, b: Sequence) -> tuple[list, list, list]:
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = trim(fracs(a)), trim(fracs(b))
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    lead = r0[-1]
    return [c / lead for c in r0], scale(s0, 1 / lead), scale(t0, 1 / lead)


def evaluate(a: Sequence, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def derivative(a: Sequence) -> list:
    return trim([i * c for i, c in enumerate(a)][1:])


def substitute_power(a: Sequence, k: int) -> list:
    """a(t^k)."""
    if not a:
        return []
    out = [Fraction(0)] * ((len(a) - 1) * k + 1)
    for i, c in enumerate(a):
        out[i * k] = c
    return trim(out)


def reverse(a: Sequence, deg: int | None = None) -> list:
    a = trim(a)
    if deg is None:
        deg = len(a) - 1
    padded = list(a) + [0] * (deg + 1 - len(a))
    return trim(padded[::-1])


def power(a: Sequence, e: int) -> list:
    out = [Fraction(1)]
    for _ in range(e):
        out = mul(out, a)
    return out


def _to_fast(xs):
    return [_fast_q(x.numerator, x.denominator) for x in map(to_fraction, xs)]


def _from_fast(xs) -> list[Fraction]:
    return [Fraction(int(x.numerator), int(x.denominator)) for x in xs]


def power_sums(c: Sequence, n: int) -> list[Fraction]:
    """Power sums p_1..p_n of the inverse roots of c (with c[0] == 1).

    For c = prod(1 - a_i t) this is sum_i a_i^k, i.e. the coefficients of
    -t c'/c.  Works for truncated series too: only c[0..n] is read.
    """
    coeffs = _to_fast(list(c[: n + 1]) + [0] * max(0, n + 1 - len(c)))
    p: list = [None] * (n + 1)
    for k in range(1, n + 1):
        acc = -k * coeffs[k]
        for i in range(1, k):
            ck = coeffs[k - i]
            if ck:
                acc -= ck * p[i]
        p[k] = acc
    return _from_fast(p[1:])


def from_power_sums(p: Sequence, n: int) -> list[Fraction]:
    """Inverse of :func:`power_sums`: coefficients c_0..c_n with c_0 = 1."""
    p = _to_fast(p[:n])
    c = _to_fast([1] + [0] * n)
    for k in range(1, n + 1):
        acc = p[k - 1]
        for i in range(1, k):
            if c[k - i]:
                acc += c[k - i] * p[i - 1]
        c[k] = -acc / k
    return _from_fast(c)


def is_integral(a: Sequence) -> bool:
    return all(Fraction(x).denominator == 1 for x in a)


def format_poly(a: Sequence, var: str = "t") -> str:
    terms = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        if c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}*{mono}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")
