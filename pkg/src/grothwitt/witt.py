"""Truncated big Witt vectors over Q.

An element of the universal ring Lambda(Q) is a power series
``1 + c_1 t + c_2 t^2 + ...`` with constant term 1.  Addition in Lambda is the
ordinary product of series; multiplication is determined by
``(1 - a t) * (1 - b t) = 1 - a b t``.  Over Q the ghost map
``f -> (d_1(f), d_2(f), ...)`` with ``-dlog f = sum d_nu(f) t^(nu-1)`` is a
ring isomorphism onto the product ring Q^N, so every ring operation is
carried out in ghost coordinates and mapped back exactly.

Series are truncated at a fixed precision ``N`` (number of stored
coefficients).  Binary operations require equal precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import poly
from .errors import PrecisionError

DEFAULT_PRECISION = 64


@dataclass(frozen=True)
class LambdaSeries:
    """``1 + sum coeffs[i] t^(i+1)`` truncated after ``t^precision``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(poly.fracs(self.coeffs)))
        if not self.coeffs:
            raise PrecisionError("a LambdaSeries needs precision >= 1")

    @classmethod
    def from_poly(cls, coeffs: Sequence, precision: int) -> "LambdaSeries":
        """Series of the polynomial ``1 + coeffs[0] t + ...`` at ``precision``."""
        c = poly.fracs(coeffs)[:precision]
        return cls(tuple(c) + (Fraction(0),) * (precision - len(c)))

    @classmethod
    def zero(cls, precision: int) -> "LambdaSeries":
        """The additive identity, the constant series 1."""
        return cls((Fraction(0),) * precision)

    @classmethod
    def one(cls, precision: int) -> "LambdaSeries":
        """The multiplicative identity ``1 - t``."""
        return cls.from_poly([-1], precision)

    @classmethod
    def linear(cls, a, precision: int) -> "LambdaSeries":
        """``1 - a t``."""
        return cls.from_poly([-poly.to_fraction(a)], precision)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def full(self) -> list[Fraction]:
        """Coefficients including the constant term."""
        return [Fraction(1), *self.coeffs]

    def __add__(self, other: "LambdaSeries") -> "LambdaSeries":
        return lambda_add(self, other)

    def __neg__(self) -> "LambdaSeries":
        return lambda_neg(self)

    def __sub__(self, other: "LambdaSeries") -> "LambdaSeries":
        return lambda_add(self, lambda_neg(other))

    def __mul__(self, other: "LambdaSeries") -> "LambdaSeries":
        return lambda_mul(self, other)

    def __str__(self) -> str:
        return poly.format_poly(self.full()) + f" + O(t^{self.precision + 1})"


@dataclass(frozen=True)
class GhostVector:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(poly.fracs(self.values)))

    @property
    def precision(self) -> int:
        return len(self.values)

    def __add__(self, other: "GhostVector") -> "GhostVector":
        _check_same(self.precision, other.precision)
        return GhostVector(tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, other: "GhostVector") -> "GhostVector":
        _check_same(self.precision, other.precision)
        return GhostVector(tuple(a * b for a, b in zip(self.values, other.values)))

    def __getitem__(self, nu: int) -> Fraction:
        """1-based access: ``g[nu]`` is the nu-th ghost component."""
        if nu < 1:
            raise IndexError("ghost components are indexed from 1")
        return self.values[nu - 1]


def _check_same(n: int, m: int) -> None:
    if n != m:
        raise PrecisionError(f"precision mismatch: {n} != {m}")


def truncate(f: LambdaSeries, precision: int) -> LambdaSeries:
    if precision > f.precision:
        raise PrecisionError(f"cannot raise precision {f.precision} to {precision}")
    return LambdaSeries(f.coeffs[:precision])


def lambda_add(f: LambdaSeries, g: LambdaSeries) -> LambdaSeries:
    _check_same(f.precision, g.precision)
    n = f.precision + 1
    return LambdaSeries(tuple(poly.mul_trunc(f.full(), g.full(), n)[1:]))


def lambda_neg(f: LambdaSeries) -> LambdaSeries:
    """Additive inverse: the series 1/f."""
    n = f.precision
    c = f.full()
    inv = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        inv[k] = -sum(c[i] * inv[k - i] for i in range(1, k + 1) if c[i])
    return LambdaSeries(tuple(inv[1:]))


@lru_cache(maxsize=1024)
def ghost(f: LambdaSeries) -> GhostVector:
    # the Newton recurrence is the coefficientwise form of -t f'/f
    return GhostVector(tuple(poly.power_sums(f.full(), f.precision)))


def ghost_inverse(v: GhostVector | Iterable) -> LambdaSeries:
    values = v.values if isinstance(v, GhostVector) else tuple(poly.fracs(v))
    n = len(values)
    return LambdaSeries(tuple(poly.from_power_sums(values, n)[1:]))


def lambda_mul(f: LambdaSeries, g: LambdaSeries) -> LambdaSeries:
    _check_same(f.precision, g.precision)
    return ghost_inverse(ghost(f) * ghost(g))


def frobenius(f: LambdaSeries | GhostVector, nu: int) -> LambdaSeries:
    """F_nu: ghost components satisfy ``d_m(F_nu f) = d_(m nu)(f)``.

    The result has precision ``floor(N / nu)``.
    """
    if nu < 1:
        raise ValueError("Frobenius index must be >= 1")
    g = f if isinstance(f, GhostVector) else ghost(f)
    out = g.precision // nu
    if out < 1:
        raise PrecisionError(f"precision {g.precision} too small for F_{nu}")
    return ghost_inverse(GhostVector(tuple(g.values[m * nu - 1] for m in range(1, out + 1))))


def verschiebung(f: LambdaSeries, nu: int) -> LambdaSeries:
    """V_nu: substitute ``t -> t^nu`` and truncate to the same precision."""
    if nu < 1:
        raise ValueError("Verschiebung index must be >= 1")
    n = f.precision
    out = [Fraction(0)] * n
    for i, c in enumerate(f.coeffs, start=1):
        if i * nu <= n:
            out[i * nu - 1] = c
    return LambdaSeries(tuple(out))
