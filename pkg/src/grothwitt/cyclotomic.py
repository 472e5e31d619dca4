"""Cyclotomic polynomials and exact arithmetic in Q(zeta_d)."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import sympy

from . import poly


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple[Fraction, ...]:
    """Phi_d as ascending coefficients, from prod_{e | d} (x^e - 1)^mu(d/e)."""
    if d < 1:
        raise ValueError("conductor must be >= 1")
    num, den = [Fraction(1)], [Fraction(1)]
    for e in sympy.divisors(d):
        m = sympy.mobius(d // e)
        factor = [Fraction(-1)] + [Fraction(0)] * (e - 1) + [Fraction(1)]
        if m == 1:
            num = poly.mul(num, factor)
        elif m == -1:
            den = poly.mul(den, factor)
    return tuple(poly.exact_div(num, den))


def totient(d: int) -> int:
    return int(sympy.totient(d))


def orders_with_totient_at_most(k: int) -> list[int]:
    """All d with phi(d) <= k (phi(d) >= sqrt(d/2) bounds the search)."""
    bound = max(2, 2 * k * k + 2)
    return [d for d in range(1, bound + 1) if totient(d) <= k]


def cyclotomic_factorization(p: Sequence, max_totient: int | None = None) -> list[int] | None:
    """Orders d with p = c * prod Phi_d (with multiplicity), or None.

    ``p`` must have rational coefficients; the leading constant is ignored.
    Only d with phi(d) <= max_totient (default: deg p) are tried.
    """
    p = poly.trim(poly.fracs(p))
    if not p:
        return None
    if max_totient is None:
        max_totient = len(p) - 1
    out = []
    for d in orders_with_totient_at_most(max_totient):
        phi = list(cyclotomic_poly(d))
        while len(p) - 1 >= len(phi) - 1:
            q, r = poly.divmod_poly(p, phi)
            if r:
                break
            p = q
            out.append(d)
        if len(p) == 1:
            return out
    return out if len(p) == 1 else None


@dataclass(frozen=True)
class CyclotomicNumber:
    """An element of Q(zeta_d): ``rep`` reduced modulo Phi_d, evaluated at zeta_d."""

    d: int
    rep: tuple[Fraction, ...] = ()

    def __post_init__(self):
        r = poly.fracs(self.rep)
        phi = list(cyclotomic_poly(self.d))
        if len(r) >= len(phi):
            r = poly.divmod_poly(r, phi)[1]
        object.__setattr__(self, "rep", tuple(poly.trim(r)))

    @classmethod
    def of(cls, d: int, value) -> "CyclotomicNumber":
        return cls(d, (poly.to_fraction(value),))

    @classmethod
    def zeta_power(cls, d: int, k: int) -> "CyclotomicNumber":
        k %= d
        return cls(d, tuple([Fraction(0)] * k + [Fraction(1)]))

    def is_zero(self) -> bool:
        return not self.rep

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.d != self.d:
                raise ValueError("cyclotomic numbers of different conductors")
            return other
        return CyclotomicNumber.of(self.d, other)

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicNumber(self.d, tuple(poly.add(self.rep, other.rep)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.d, tuple(poly.neg(self.rep)))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return CyclotomicNumber(self.d, tuple(poly.mul(self.rep, other.rep)))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_d)")
        g, s, _ = poly.xgcd(self.rep, cyclotomic_poly(self.d))
        assert len(g) == 1  # Phi_d is irreducible
        return CyclotomicNumber(self.d, tuple(s))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.d == other.d and self.rep == other.rep
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.d, self.rep))

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.d)
        return complex(sum(float(c) * z**i for i, c in enumerate(self.rep)))

    def __str__(self) -> str:
        if self.d <= 2:
            return str(self.rep[0] if self.rep else 0)
        return poly.format_poly(list(self.rep), var=f"z{self.d}")


def rank(rows: Sequence[Sequence[CyclotomicNumber]]) -> int:
    """Rank over Q(zeta_d) by Gaussian elimination with exact field inverses."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not m[i][c].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        for i in range(r + 1, nrows):
            if not m[i][c].is_zero():
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r
