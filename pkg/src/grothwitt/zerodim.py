"""The subring of K_0(Var_k) generated by zero-dimensional varieties.

Over a finite field k the classes ``x_nu = [Spec k_nu]`` form a Z-basis of
this ring, with ``x_mu x_nu = gcd(mu, nu) x_lcm(mu, nu)`` because
``k_mu (x)_k k_nu`` splits as gcd(mu, nu) copies of k_lcm.  The counting
measures ``psi_n(x_nu) = nu if nu | n else 0`` detect every element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Mapping

from .rational import MotivicMeasurePoly, OnePoly, WittRational, rw_scalar


@dataclass(frozen=True)
class SElement:
    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, v in dict(self.terms).items():
            k, v = int(k), int(v)
            if k < 1:
                raise ValueError(f"basis index must be positive, got {k}")
            if v:
                clean[k] = v
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def basis(cls, nu: int, coeff: int = 1) -> "SElement":
        return cls({nu: coeff})

    @classmethod
    def integer(cls, n: int) -> "SElement":
        return cls({1: n})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SElement") -> "SElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SElement(out)

    def __neg__(self) -> "SElement":
        return SElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SElement") -> "SElement":
        return self + (-other)

    def __mul__(self, other: "SElement") -> "SElement":
        return s_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, SElement) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*x_{k}" for k, v in self.terms.items()).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"terms": {str(k): v for k, v in self.terms.items()}}

    @classmethod
    def from_json(cls, obj) -> "SElement":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if "terms" in obj and isinstance(obj["terms"], dict):
            obj = obj["terms"]
        return cls({int(k): int(v) for k, v in obj.items()})


def s_mul(a: SElement, b: SElement) -> SElement:
    out: dict[int, int] = {}
    for mu, x in a.terms.items():
        for nu, y in b.terms.items():
            d = gcd(mu, nu)
            m = mu * nu // d
            out[m] = out.get(m, 0) + d * x * y
    return SElement(out)


def psi(a: SElement, n: int) -> int:
    """Number of k_n-points: sum of a_nu * nu over nu dividing n."""
    if n < 1:
        raise ValueError("psi index must be >= 1")
    return sum(v * k for k, v in a.terms.items() if n % k == 0)


def zero_divisor_witness(nu: int) -> tuple[SElement, SElement]:
    """(x_nu, x_nu - nu) whose product vanishes."""
    if nu < 2:
        raise ValueError("x_1 is the unit; zero divisors need nu >= 2")
    x = SElement.basis(nu)
    return x, x - SElement.integer(nu)


def measure_of_etale(nu: int) -> MotivicMeasurePoly:
    """Measure of Spec k_nu: Frobenius cycles a basis of H^0, so det(1 - F t) = 1 - t^nu."""
    if nu < 1:
        raise ValueError("degree must be >= 1")
    return MotivicMeasurePoly((WittRational(OnePoly([0] * (nu - 1) + [-1])),))


def measure_of_element(a: SElement) -> MotivicMeasurePoly:
    """Extend measure_of_etale additively."""
    out = MotivicMeasurePoly()
    for nu, c in a.terms.items():
        base = measure_of_etale(nu).coeffs[0]
        out = out + MotivicMeasurePoly((rw_scalar(c, base),))
    return out
