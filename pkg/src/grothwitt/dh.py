"""Arithmetic of the curves y^p - y = x^(p^a - 1).

Their Frobenius eigenvalues over F_(p^a) are generalized Jacobi sums whose
p-adic valuations are given by Stickelberger's theorem as base-p digit sums.
Everything exact here is combinatorial (digit sums, the valuation matrix,
Euler phi); the sums themselves are evaluated in interval arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath
import numpy as np
import sympy
from sympy.ntheory.modular import crt

from .errors import BudgetExceeded, Inconclusive
from .ff import field_make


@dataclass(frozen=True)
class DHCurve:
    p: int
    a: int

    @property
    def genus(self) -> int:
        return (self.p**self.a - 2) * (self.p - 1) // 2


def _check(p: int, a: int) -> None:
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    if a < 1:
        raise ValueError("a must be >= 1")


def sigma(t: int, p: int, a: int) -> int:
    """Sum of the a base-p digits of t mod (p^a - 1), without range checks."""
    t %= p**a - 1
    s = 0
    for _ in range(a):
        t, r = divmod(t, p)
        s += r
    return s


def digit_sum(t: int, p: int, a: int) -> int:
    _check(p, a)
    if not 1 <= t <= p**a - 2:
        raise ValueError(f"t={t} outside 1..{p**a - 2}")
    return sigma(t, p, a)


@dataclass(frozen=True)
class JacobiSumIndex:
    j: int
    t: int

    def validate(self, p: int, a: int) -> None:
        if not 1 <= self.j <= p - 1:
            raise ValueError(f"j={self.j} outside 1..{p - 1}")
        if not 1 <= self.t <= p**a - 2:
            raise ValueError(f"t={self.t} outside 1..{p**a - 2}")


def stickelberger_valuation(idx: JacobiSumIndex, p: int, a: int) -> Fraction:
    """v(tau_j(chi^t)) = sigma(t)/(p - 1), normalized by v(p) = 1."""
    _check(p, a)
    idx.validate(p, a)
    return Fraction(sigma(idx.t, p, a), p - 1)


def jacobi_sum_exponents(idx: JacobiSumIndex, p: int, a: int, budget: int = 10**6) -> np.ndarray:
    """Exact form of -tau as counts c_k with -tau = sum_k c_k zeta_N^k, N = p(p^a - 1)."""
    _check(p, a)
    idx.validate(p, a)
    q = p**a
    if q > budget:
        raise BudgetExceeded(f"GF({q}) exceeds the enumeration budget {budget}")
    F = field_make(p, a)
    exp = F.exp_table if a > 1 else np.array([pow(F.generator, k, p) for k in range(q - 1)], dtype=np.int64)
    tr = F.trace_table[exp]
    k = np.arange(q - 1, dtype=np.int64)
    # chi^t(g^k) psi(g^k) = zeta_N^(t k p + j tr (q - 1))
    N = p * (q - 1)
    angles = (idx.t * k * p + idx.j * tr * (q - 1)) % N
    return np.bincount(angles, minlength=N)


@dataclass(frozen=True)
class IntervalComplex:
    value: complex
    radius: float

    def __str__(self) -> str:
        v = self.value
        return f"{v.real:.15g}{v.imag:+.15g}i ± {self.radius:.3g}"


def _sum_roots(counts: np.ndarray, N: int, bits: int, multiplier: int = 1) -> IntervalComplex:
    iv = mpmath.iv
    old = iv.prec
    iv.prec = bits
    try:
        re = iv.mpf(0)
        im = iv.mpf(0)
        two_pi = 2 * iv.pi
        for k in np.nonzero(counts)[0]:
            c = int(counts[k])
            ang = two_pi * iv.mpf((int(k) * multiplier) % N) / N
            re += c * iv.cos(ang)
            im += c * iv.sin(ang)
        re, im = -re, -im
        mid = complex(float(re.mid), float(im.mid))
        rad = float(max(re.delta, im.delta)) / 2
        # rounding the midpoint to double precision adds at most one ulp
        rad += 2.0**-52 * max(1.0, abs(mid))
        return IntervalComplex(mid, rad)
    finally:
        iv.prec = old


def jacobi_sum(idx: JacobiSumIndex, p: int, a: int, bits: int = 128, budget: int = 10**6) -> IntervalComplex:
    """tau_j(chi^t) = -sum_u chi^t(u) exp(2 pi i j tr(u) / p) over u in F_(p^a)^*.

    chi sends the field's deterministic generator to exp(2 pi i / (p^a - 1)).
    """
    counts = jacobi_sum_exponents(idx, p, a, budget)
    return _sum_roots(counts, p * (p**a - 1), bits)


def galois_conjugate(idx: JacobiSumIndex, p: int, a: int, gamma: int, bits: int = 128) -> IntervalComplex:
    """Image of tau_j(chi^t) under zeta_(p^a - 1) -> zeta^gamma, zeta_p fixed."""
    q = p**a
    if gcd(gamma, q - 1) != 1:
        raise ValueError("gamma must be a unit mod p^a - 1")
    N = p * (q - 1)
    # c = gamma mod (q - 1), c = 1 mod p
    c = int(crt([q - 1, p], [gamma % (q - 1), 1])[0])
    return _sum_roots(jacobi_sum_exponents(idx, p, a), N, bits, multiplier=c)


@dataclass(frozen=True)
class Threshold:
    T: int
    failures: tuple[int, ...]
    horizon: int
    note: str = "the inequality beyond the horizon is assumed, not verified"


def phi_threshold(p: int, horizon: int) -> Threshold:
    """Least T <= horizon with phi(p^n - 1)/n > phi(p - 1) for all T <= n <= horizon."""
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    if horizon < 10:
        raise ValueError("horizon must be >= 10")
    base = int(sympy.totient(p - 1))
    good = {n: int(sympy.totient(p**n - 1)) > n * base for n in range(1, horizon + 1)}
    T = horizon + 1
    while T > 1 and good[T - 1]:
        T -= 1
    if T > horizon:
        raise Inconclusive(f"the inequality fails at n = {horizon}", [n for n in good if not good[n]])
    return Threshold(T, tuple(n for n in range(1, T) if not good[n]), horizon)


def valid_gammas(p: int, n: int) -> list[int]:
    """gamma in 1..p^n-2, units mod p^n - 1, with sigma(gamma) = 1 mod (p-1) and sigma(gamma) != 1."""
    m = p**n - 1
    return [
        g
        for g in range(1, m)
        if gcd(g, m) == 1 and (sigma(g, p, n) - 1) % (p - 1) == 0 and sigma(g, p, n) != 1
    ]


@dataclass(frozen=True)
class ValuationMatrix:
    X: tuple[tuple[int, int], tuple[int, int]]
    det: int
    a: int


def valuation_matrix(p: int, n: int, gamma: int) -> ValuationMatrix:
    """Digit-sum matrix [[s(1), s(p^n-2)], [s(gamma), s(-gamma)]] with det = -a n (p-1)^2."""
    _check(p, n)
    if not sympy.isprime(n):
        raise ValueError(f"n={n} must be prime")
    T = phi_threshold(p, max(10, n)).T
    if n < T:
        raise ValueError(f"n={n} is below the phi threshold {T} for p={p}")
    m = p**n - 1
    gamma %= m
    if gcd(gamma, m) != 1:
        raise ValueError(f"gamma={gamma} is not a unit mod {m}")
    s = sigma(gamma, p, n)
    if s == 1:
        raise ValueError(f"gamma={gamma} has digit sum 1, so gamma lies in p^Z")
    if (s - 1) % (p - 1):
        raise ValueError(f"sigma(gamma)={s} is not 1 mod {p - 1}")
    a = (s - 1) // (p - 1)
    X = ((sigma(1, p, n), sigma(m - 1, p, n)), (s, sigma(-gamma, p, n)))
    det = X[0][0] * X[1][1] - X[0][1] * X[1][0]
    assert det == -a * n * (p - 1) ** 2, (X, det)
    return ValuationMatrix(X, det, a)
