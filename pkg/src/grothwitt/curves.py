"""Projective plane curves over finite fields, their zeta functions and measures.

For a proper smooth geometrically connected curve X of genus g over F_q,

    Z(X, t) = P_1(t) / ((1 - t)(1 - q t)),   P_1(t) = prod_i (1 - alpha_i t),

and ``N_nu = q^nu + 1 - sum_i alpha_i^nu``.  The numerator is therefore the
polynomial whose inverse-root power sums are ``1 + q^nu - N_nu``, which
:func:`zeta_from_counts` inverts with Newton's identities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from . import poly
from .errors import BudgetExceeded, InvalidInputError
from .ff import FieldSpec, field_make
from .rational import (
    MotivicMeasurePoly,
    OnePoly,
    WittRational,
    measure_verschiebung,
    poly_frobenius,
)

DEFAULT_BUDGET = 10**6


@dataclass
class CurveDescriptor:
    """A plane curve ``sum c X^i Y^j Z^k = 0`` over ``field``.

    ``terms`` maps exponent triples to coefficient codes of ``field``.  The
    projective line is available through :meth:`projective_line`, which sets
    ``builtin = "P1"`` and carries no equation.
    """

    field: FieldSpec
    terms: dict[tuple[int, int, int], int]
    genus: int
    smooth_model: bool = True
    builtin: str | None = None
    _counts: dict[int, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.genus < 0:
            raise InvalidInputError("genus", "genus must be nonnegative")
        if self.builtin == "P1":
            if self.genus != 0:
                raise InvalidInputError("genus", "the projective line has genus 0")
            return
        if self.builtin is not None:
            raise InvalidInputError("builtin", f"unknown builtin curve {self.builtin!r}")
        self.terms = {tuple(int(v) for v in e): int(c) for e, c in self.terms.items() if int(c) % self.field.q}
        if not self.terms:
            raise InvalidInputError("equation", "the equation is zero")
        degrees = {sum(e) for e in self.terms}
        if len(degrees) != 1:
            raise InvalidInputError("equation", "the equation is not homogeneous")
        d = degrees.pop()
        if self.genus > 0 and d < 3:
            raise InvalidInputError("genus", f"a degree-{d} plane curve has genus 0")
        if self.smooth_model and self.genus != (d - 1) * (d - 2) // 2:
            raise InvalidInputError(
                "genus", f"a smooth plane curve of degree {d} has genus {(d - 1) * (d - 2) // 2}"
            )

    @classmethod
    def projective_line(cls, field: FieldSpec) -> "CurveDescriptor":
        return cls(field, {}, 0, True, builtin="P1")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def degree(self) -> int | None:
        return None if self.builtin else sum(next(iter(self.terms)))

    def to_json(self) -> dict:
        out = {"field": self.field.to_json(), "genus": self.genus, "smooth_model": self.smooth_model}
        if self.builtin:
            out["builtin"] = self.builtin
        else:
            out["monomials"] = [
                {"e": list(e), "c": self.field.coeffs(c)} for e, c in sorted(self.terms.items())
            ]
        return out

    @classmethod
    def from_json(cls, obj: dict | str) -> "CurveDescriptor":
        if isinstance(obj, str):
            obj = json.loads(obj)
        f = obj["field"]
        spec = FieldSpec.from_json(f) if "modulus" in f else field_make(int(f["p"]), int(f.get("n", 1)))
        if obj.get("builtin"):
            return cls(spec, {}, int(obj.get("genus", 0)), True, builtin=obj["builtin"])
        terms: dict[tuple[int, int, int], int] = {}
        for m in obj["monomials"]:
            e = tuple(int(v) for v in m["e"])
            if len(e) != 3:
                raise InvalidInputError("equation", "exponent vectors must have length 3")
            terms[e] = spec.add(terms.get(e, 0), spec.element(m["c"]))
        return cls(spec, terms, int(obj["genus"]), bool(obj.get("smooth_model", True)))


def count_points(curve: CurveDescriptor, nu: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of points of the curve over the degree-nu extension of its field."""
    if nu < 1:
        raise ValueError("extension degree must be >= 1")
    base = curve.field
    q_nu = base.q**nu
    if curve.builtin == "P1":
        return q_nu + 1
    if nu in curve._counts:
        return curve._counts[nu]
    if q_nu > budget:
        raise BudgetExceeded(f"GF({q_nu}) exceeds the enumeration budget {budget}")
    big = field_make(base.p, base.n * nu)
    root = big.embedding_root(base)
    terms = [(e, big.embed(base, c, root)) for e, c in curve.terms.items()]

    elems = np.arange(big.q, dtype=np.int64)
    max_j = max(e[1] for e, _ in terms)
    ypow = [big.vpow(elems, j) for j in range(max_j + 1)]

    total = 0
    # chart Z = 1
    for x in range(big.q):
        acc = np.zeros(big.q, dtype=np.int64)
        for (i, j, _k), c in terms:
            acc = big.vadd(acc, big.vmul(big.mul(c, big.pow(x, i)), ypow[j]))
        total += int(np.count_nonzero(acc == 0))
    # Z = 0, Y = 1
    for x in range(big.q):
        acc = 0
        for (i, _j, k), c in terms:
            if k == 0:
                acc = big.add(acc, big.mul(c, big.pow(x, i)))
        total += acc == 0
    # Z = Y = 0, X = 1
    acc = 0
    for (_i, j, k), c in terms:
        if j == 0 and k == 0:
            acc = big.add(acc, c)
    total += acc == 0
    curve._counts[nu] = int(total)
    return int(total)


@dataclass(frozen=True)
class ZetaData:
    q: int
    genus: int
    counts: tuple[int, ...]
    numerator: OnePoly

    def eigenvalue_power_sums(self, n: int) -> list[Fraction]:
        return self.numerator.power_sums(n)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "genus": self.genus,
            "counts": list(self.counts),
            "numerator": [str(c) for c in self.numerator.coeffs],
        }


def counts_from_numerator(q: int, numerator: OnePoly, n: int) -> list[int]:
    """N_1..N_n of a curve with zeta numerator ``numerator`` over F_q."""
    s = numerator.power_sums(n)
    out = []
    for nu in range(1, n + 1):
        v = q**nu + 1 - s[nu - 1]
        if v.denominator != 1:
            raise InvalidInputError("integrality", f"N_{nu} = {v} is not an integer")
        out.append(int(v))
    return out


def inverse_roots(p: Sequence) -> list:
    """Inverse roots of p (constant term first), with multiplicity, via mpmath."""
    p = poly.fracs(p)
    if len(p) <= 1:
        return []
    with mpmath.workdps(60):
        # distinct roots of the squarefree part, then multiplicities from the exact gcd chain
        out = []
        rest = p
        while len(rest) > 1:
            g = poly.gcd(rest, poly.derivative(rest))
            sqfree = poly.exact_div(rest, g)
            rev = [mpmath.mpf(c.numerator) / c.denominator for c in sqfree]
            # read leading-first, the ascending list is the reversal, whose roots are the inverse roots
            out.extend(mpmath.polyroots(rev, maxsteps=200, extraprec=200))
            rest = g
        return out


def check_numerator(q: int, g: int, p: Sequence) -> None:
    """Raise InvalidInputError unless p is a plausible weight-one numerator."""
    p = poly.fracs(p)
    p = p + [Fraction(0)] * (2 * g + 1 - len(p))
    if len(poly.trim(p)) != 2 * g + 1:
        raise InvalidInputError("degree", f"numerator must have degree {2 * g}")
    for i in range(2 * g + 1):
        if p[2 * g - i] != Fraction(q) ** (g - i) * p[i]:
            raise InvalidInputError(
                "functional_equation",
                f"c_{2 * g - i} = {p[2 * g - i]} but q^{g - i} c_{i} = {Fraction(q) ** (g - i) * p[i]}",
            )
    if not poly.is_integral(p):
        raise InvalidInputError("integrality", "numerator coefficients are not integers")
    target = mpmath.sqrt(q)
    for a in inverse_roots(p):
        if abs(abs(a) - target) > 1e-9 * target:
            raise InvalidInputError("weil_bound", f"inverse root {mpmath.nstr(a, 12)} has |alpha| != sqrt({q})")


def zeta_from_counts(q: int, g: int, counts: Sequence[int]) -> ZetaData:
    if len(counts) != 2 * g:
        raise InvalidInputError("count_length", f"expected {2 * g} counts, got {len(counts)}")
    s = [1 + q**nu - int(n) for nu, n in enumerate(counts, start=1)]
    p = poly.from_power_sums(s, 2 * g) if g else [Fraction(1)]
    check_numerator(q, g, p)
    return ZetaData(q, g, tuple(int(c) for c in counts), OnePoly.from_full(p))


def zeta_from_numerator(q: int, numerator: Sequence) -> ZetaData:
    """ZetaData from P_1 given as coefficients of t^0..t^(2g)."""
    p = poly.trim(poly.fracs(numerator)) or [Fraction(1)]
    if p[0] != 1:
        raise InvalidInputError("constant_term", "P_1(0) must be 1")
    if (len(p) - 1) % 2:
        raise InvalidInputError("degree", "P_1 must have even degree")
    g = (len(p) - 1) // 2
    check_numerator(q, g, p)
    num = OnePoly.from_full(p)
    return ZetaData(q, g, tuple(counts_from_numerator(q, num, 2 * g)), num)


def curve_zeta(curve: CurveDescriptor, budget: int = DEFAULT_BUDGET) -> ZetaData:
    counts = [count_points(curve, nu, budget) for nu in range(1, 2 * curve.genus + 1)]
    return zeta_from_counts(curve.q, curve.genus, counts)


def motivic_measure(z: ZetaData) -> MotivicMeasurePoly:
    """(1 - t) + (1 / P_1) T + (1 - q t) T^2."""
    return MotivicMeasurePoly(
        (
            WittRational(OnePoly((-1,))),
            WittRational(OnePoly(), z.numerator),
            WittRational(OnePoly((-z.q,))),
        )
    )


def base_change(z: ZetaData, M: int) -> ZetaData:
    if M < 1:
        raise ValueError("extension degree must be >= 1")
    if M == 1:
        return z
    num = poly_frobenius(z.numerator, M)
    qm = z.q**M
    return ZetaData(qm, z.genus, tuple(counts_from_numerator(qm, num, 2 * z.genus)), num)


def restrict_scalars(z: ZetaData, M: int) -> MotivicMeasurePoly:
    if M < 1:
        raise ValueError("extension degree must be >= 1")
    return measure_verschiebung(motivic_measure(z), M)
