"""The subring R(Q) of Lambda(Q) and the graded ring R(Q)[T].

R(Q) consists of formal differences ``f - g`` of polynomials with constant
term 1, i.e. of the rational functions ``f / g``.  Its ring operations act on
the polynomials directly: Lambda-addition multiplies fractions, and the
Lambda-product of two polynomials is again a polynomial whose inverse roots
are all pairwise products, computed here through Newton power sums.

Motivic measures of varieties over F_q live in ``R(Q)[T]``; they are stored as
:class:`MotivicMeasurePoly`, a tuple of :class:`WittRational` coefficients
indexed by the weight ``i`` of ``T^i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import poly
from .witt import LambdaSeries


@dataclass(frozen=True)
class OnePoly:
    """``1 + coeffs[0] t + ... + coeffs[d-1] t^d`` with nonzero leading term."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(poly.trim(poly.fracs(self.coeffs))))

    @classmethod
    def from_full(cls, full: Sequence) -> "OnePoly":
        full = poly.fracs(full)
        if not full or full[0] == 0:
            raise ValueError("constant term must be nonzero")
        return cls(tuple(c / full[0] for c in full[1:]))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def full(self) -> list[Fraction]:
        return [Fraction(1), *self.coeffs]

    def power_sums(self, n: int) -> list[Fraction]:
        return poly.power_sums(self.full(), n)

    def __mul__(self, other: "OnePoly") -> "OnePoly":
        """Ordinary polynomial product (Lambda-addition)."""
        return OnePoly.from_full(poly.mul(self.full(), other.full()))

    def __str__(self) -> str:
        return poly.format_poly(self.full())


ONE = OnePoly()


def poly_witt_mul(f: OnePoly, g: OnePoly) -> OnePoly:
    """Lambda-product of two polynomials: inverse roots multiply pairwise."""
    d = f.degree * g.degree
    if d == 0:
        return ONE
    pf, pg = f.power_sums(d), g.power_sums(d)
    return OnePoly.from_full(poly.from_power_sums([a * b for a, b in zip(pf, pg)], d))


def poly_frobenius(f: OnePoly, nu: int) -> OnePoly:
    """Raise every inverse root to the nu-th power (same degree)."""
    d = f.degree
    if d == 0 or nu == 1:
        return f
    ps = f.power_sums(d * nu)
    return OnePoly.from_full(poly.from_power_sums([ps[k * nu - 1] for k in range(1, d + 1)], d))


@dataclass(frozen=True)
class WittRational:
    """The element ``num - den`` of Lambda(Q), i.e. the series ``num / den``.

    Construction puts the pair in canonical form: common factors are
    cancelled over Q and both constant terms are 1.
    """

    num: OnePoly = ONE
    den: OnePoly = ONE

    def __post_init__(self):
        num, den = self.num, self.den
        if not isinstance(num, OnePoly):
            num = OnePoly(num)
        if not isinstance(den, OnePoly):
            den = OnePoly(den)
        if num.degree and den.degree:
            g = poly.gcd(num.full(), den.full())
            if len(g) > 1:
                num = OnePoly.from_full(poly.exact_div(num.full(), g))
                den = OnePoly.from_full(poly.exact_div(den.full(), g))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_full(cls, num: Sequence = (1,), den: Sequence = (1,)) -> "WittRational":
        return cls(OnePoly.from_full(num), OnePoly.from_full(den))

    @classmethod
    def zero(cls) -> "WittRational":
        return cls()

    @classmethod
    def one(cls) -> "WittRational":
        return cls(OnePoly((-1,)))

    @classmethod
    def integer(cls, n: int) -> "WittRational":
        """The image of the integer n, i.e. n copies of the unit ``1 - t``."""
        p = OnePoly.from_full(poly.power([1, -1], abs(n)))
        return cls(p) if n >= 0 else cls(ONE, p)

    def is_zero(self) -> bool:
        return self.num.degree == 0 and self.den.degree == 0

    def __add__(self, other: "WittRational") -> "WittRational":
        return rw_add(self, other)

    def __neg__(self) -> "WittRational":
        return WittRational(self.den, self.num)

    def __sub__(self, other: "WittRational") -> "WittRational":
        return rw_add(self, -other)

    def __mul__(self, other: "WittRational") -> "WittRational":
        return rw_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WittRational):
            return NotImplemented
        return rw_equal(self, other)

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.degree == 0:
            return f"({self.num})"
        return f"({self.num})/({self.den})"

    def ghost(self, n: int) -> list[Fraction]:
        """Ghost components d_1..d_n."""
        a, b = self.num.power_sums(n), self.den.power_sums(n)
        return [x - y for x, y in zip(a, b)]

    def series(self, precision: int) -> LambdaSeries:
        """Power-series expansion of num/den."""
        num = self.num.full()
        den = self.den.full()
        out = [Fraction(0)] * (precision + 1)
        for k in range(precision + 1):
            acc = num[k] if k < len(num) else Fraction(0)
            for i in range(1, min(k, len(den) - 1) + 1):
                acc -= den[i] * out[k - i]
            out[k] = acc
        return LambdaSeries(tuple(out[1:]))


def rw_add(a: WittRational, b: WittRational) -> WittRational:
    return WittRational(a.num * b.num, a.den * b.den)


def rw_mul(a: WittRational, b: WittRational) -> WittRational:
    # (f1 - g1)(f2 - g2) = (f1 f2 + g1 g2) - (f1 g2 + g1 f2)
    plus = poly_witt_mul(a.num, b.num) * poly_witt_mul(a.den, b.den)
    minus = poly_witt_mul(a.num, b.den) * poly_witt_mul(a.den, b.num)
    return WittRational(plus, minus)


def rw_ghost(a: WittRational, nu: int) -> Fraction:
    if nu < 1:
        raise ValueError("ghost index must be >= 1")
    return a.ghost(nu)[-1]


def rw_equal(a: WittRational, b: WittRational) -> bool:
    # cross-multiplication, independent of canonical form
    return poly.mul(a.num.full(), b.den.full()) == poly.mul(b.num.full(), a.den.full())


def rw_frobenius(a: WittRational, nu: int) -> WittRational:
    if nu < 1:
        raise ValueError("Frobenius index must be >= 1")
    return WittRational(poly_frobenius(a.num, nu), poly_frobenius(a.den, nu))


def rw_verschiebung(a: WittRational, nu: int) -> WittRational:
    if nu < 1:
        raise ValueError("Verschiebung index must be >= 1")
    return WittRational(
        OnePoly.from_full(poly.substitute_power(a.num.full(), nu)),
        OnePoly.from_full(poly.substitute_power(a.den.full(), nu)),
    )


def rw_scalar(n: int, a: WittRational) -> WittRational:
    """n * a for an integer n."""
    num, den = a.num, a.den
    if n < 0:
        num, den, n = den, num, -n
    return WittRational(
        OnePoly.from_full(poly.power(num.full(), n)),
        OnePoly.from_full(poly.power(den.full(), n)),
    )


ZERO = WittRational()


@dataclass(frozen=True)
class MotivicMeasurePoly:
    """``sum_i coeffs[i] T^i`` in R(Q)[T]; trailing zero coefficients trimmed."""

    coeffs: tuple[WittRational, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1].is_zero():
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def constant(cls, a: WittRational) -> "MotivicMeasurePoly":
        return cls((a,))

    @classmethod
    def one(cls) -> "MotivicMeasurePoly":
        return cls((WittRational.one(),))

    @classmethod
    def integer(cls, n: int) -> "MotivicMeasurePoly":
        return cls((WittRational.integer(n),))

    def coefficient(self, i: int) -> WittRational:
        return self.coeffs[i] if i < len(self.coeffs) else ZERO

    @property
    def weight_degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "MotivicMeasurePoly") -> "MotivicMeasurePoly":
        return measure_add(self, other)

    def __neg__(self) -> "MotivicMeasurePoly":
        return MotivicMeasurePoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "MotivicMeasurePoly") -> "MotivicMeasurePoly":
        return measure_add(self, -other)

    def __mul__(self, other: "MotivicMeasurePoly") -> "MotivicMeasurePoly":
        return measure_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MotivicMeasurePoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return all(rw_equal(self.coefficient(i), other.coefficient(i)) for i in range(n))

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        parts = [f"{c}*T^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"


def measure_add(a: MotivicMeasurePoly, b: MotivicMeasurePoly) -> MotivicMeasurePoly:
    n = max(len(a.coeffs), len(b.coeffs))
    return MotivicMeasurePoly(tuple(rw_add(a.coefficient(i), b.coefficient(i)) for i in range(n)))


def measure_mul(a: MotivicMeasurePoly, b: MotivicMeasurePoly) -> MotivicMeasurePoly:
    if not a.coeffs or not b.coeffs:
        return MotivicMeasurePoly()
    out = [ZERO] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x.is_zero():
            continue
        for j, y in enumerate(b.coeffs):
            if not y.is_zero():
                out[i + j] = rw_add(out[i + j], rw_mul(x, y))
    return MotivicMeasurePoly(tuple(out))


def measure_scalar(n: int, a: MotivicMeasurePoly) -> MotivicMeasurePoly:
    return MotivicMeasurePoly(tuple(rw_scalar(n, c) for c in a.coeffs))


def measure_ghost(a: MotivicMeasurePoly, nu: int) -> list[Fraction]:
    """d_nu applied coefficientwise: a polynomial in T, constant term first."""
    return poly.trim([rw_ghost(c, nu) for c in a.coeffs])


def measure_ghosts(a: MotivicMeasurePoly, n: int) -> list[list[Fraction]]:
    """``[measure_ghost(a, nu) for nu in 1..n]`` sharing one power-sum pass."""
    per_coeff = [c.ghost(n) for c in a.coeffs]
    return [poly.trim([g[nu] for g in per_coeff]) for nu in range(n)]


def measure_frobenius(a: MotivicMeasurePoly, nu: int) -> MotivicMeasurePoly:
    return MotivicMeasurePoly(tuple(rw_frobenius(c, nu) for c in a.coeffs))


def measure_verschiebung(a: MotivicMeasurePoly, nu: int) -> MotivicMeasurePoly:
    return MotivicMeasurePoly(tuple(rw_verschiebung(c, nu) for c in a.coeffs))


def measure_power(a: MotivicMeasurePoly, e: int) -> MotivicMeasurePoly:
    out = MotivicMeasurePoly.one()
    for _ in range(e):
        out = measure_mul(out, a)
    return out
