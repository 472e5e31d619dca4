"""Ghost zero sets, irreducible-relation localization and the two-curves test.

Every ghost component of an element of R(Q)[T] is an exponential polynomial
``sum m_i alpha_i^nu`` in nu, so by Skolem-Mahler-Lech its zero set is a
finite set together with full residue classes for one modulus (a *good* set).
Periods are not computable in general; we fit a description on a finite
horizon and report it together with that horizon.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Sequence

import sympy

from . import poly
from .curves import ZetaData, base_change
from .cyclotomic import cyclotomic_poly, orders_with_totient_at_most
from .errors import Inconclusive, InvalidInputError
from .rational import MotivicMeasurePoly, OnePoly, WittRational, measure_ghosts, poly_frobenius, poly_witt_mul


# -- good sets ---------------------------------------------------------------

@dataclass(frozen=True)
class GoodSet:
    """``finite_part`` union the classes ``I`` modulo ``modulus`` (positive integers only)."""

    finite_part: frozenset[int]
    modulus: int
    residues: frozenset[int]
    horizon: int

    def __contains__(self, nu: int) -> bool:
        return nu in self.finite_part or nu % self.modulus in self.residues

    def members(self, upto: int | None = None) -> list[int]:
        upto = self.horizon if upto is None else upto
        return [nu for nu in range(1, upto + 1) if nu in self]

    def to_json(self) -> dict:
        return {
            "finite": sorted(self.finite_part),
            "M": self.modulus,
            "I": sorted(self.residues),
            "horizon": self.horizon,
        }

    def __str__(self) -> str:
        sigma = "{" + ", ".join(map(str, sorted(self.finite_part))) + "}"
        res = "{" + ", ".join(map(str, sorted(self.residues))) + "}"
        return f"Sigma={sigma} M={self.modulus} I={res} (verified to {self.horizon})"


def fit_good_set(zeros: set[int] | Sequence[int], horizon: int) -> GoodSet:
    """Minimal-modulus description of a zero set observed on 1..horizon.

    For each modulus M <= horizon/2, a residue class enters I only if every
    nu <= horizon in it is a zero; the leftover zeros form Sigma, which must
    lie in the first half of the horizon so that a genuinely periodic tail
    cannot be absorbed into the finite part.
    """
    zeros = {int(z) for z in zeros if 1 <= z <= horizon}
    for M in range(1, horizon // 2 + 1):
        residues = set()
        for r in range(M):
            cls = range(r if r else M, horizon + 1, M)
            if all(nu in zeros for nu in cls):
                residues.add(r)
        sigma = {nu for nu in zeros if nu % M not in residues}
        if all(nu <= horizon // 2 for nu in sigma):
            g = GoodSet(frozenset(sigma), M, frozenset(residues), horizon)
            assert set(g.members()) == zeros
            return g
    raise Inconclusive(f"no periodic description with modulus <= {horizon // 2}", sorted(zeros))


def _degree_bound(m: MotivicMeasurePoly | WittRational) -> int:
    coeffs = m.coeffs if isinstance(m, MotivicMeasurePoly) else (m,)
    return sum(c.num.degree + c.den.degree for c in coeffs)


def ghost_zero_set(m: MotivicMeasurePoly | WittRational, horizon: int) -> GoodSet:
    if isinstance(m, WittRational):
        m = MotivicMeasurePoly((m,))
    need = 4 * _degree_bound(m)
    if horizon < need:
        raise InvalidInputError("horizon", f"horizon {horizon} is below 4 x total degree = {need}")
    ghosts = measure_ghosts(m, horizon)
    zeros = {nu for nu in range(1, horizon + 1) if not ghosts[nu - 1]}
    return fit_good_set(zeros, horizon)


# -- integer polynomials in T_1..T_n ------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    n: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in dict(self.terms).items():
            e = tuple(int(v) for v in e)
            if len(e) != self.n or any(v < 0 for v in e):
                raise ValueError(f"bad exponent {e} for {self.n} variables")
            if c:
                clean[e] = int(c)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "IntPoly":
        """Parse an expression in T1, T2, ... (``T`` alone means T1)."""
        text = text.replace("−", "-").replace("^", "**")
        text = re.sub(r"\bT\b", "T1", text)
        names = sorted({int(k) for k in re.findall(r"T(\d+)", text)} or {1})
        n = max(max(names), n or 0)
        syms = sympy.symbols(" ".join(f"T{i}" for i in range(1, n + 1)), seq=True)
        expr = sympy.sympify(text, locals={f"T{i}": s for i, s in enumerate(syms, 1)})
        p = sympy.Poly(expr, *syms)
        if any(not c.is_integer for c in p.coeffs()):
            raise InvalidInputError("factor", f"{text!r} does not have integer coefficients")
        return cls(n, {e: int(c) for e, c in p.terms()})

    def to_sympy(self):
        syms = sympy.symbols(" ".join(f"T{i}" for i in range(1, self.n + 1)), seq=True)
        return sum(c * sympy.prod(s**k for s, k in zip(syms, e)) for e, c in self.terms.items())

    def __str__(self) -> str:
        return str(self.to_sympy()).replace("**", "^")

    def evaluate(self, values: Sequence[list]) -> list:
        """Evaluate at polynomials in T (ascending coefficient lists)."""
        total: list = []
        for e, c in self.terms.items():
            term = [Fraction(c)]
            for v, k in zip(values, e):
                for _ in range(k):
                    term = poly.mul(term, v)
            total = poly.add(total, term)
        return total


def factor_univariate(p: IntPoly) -> list[IntPoly]:
    """Irreducible factors over Z of a univariate relation (with multiplicity, no content)."""
    if p.n != 1:
        raise ValueError("only univariate relations are factored; supply factor lists otherwise")
    T1 = sympy.Symbol("T1")
    _, factors = sympy.factor_list(p.to_sympy(), T1)
    out = []
    for f, mult in factors:
        q = sympy.Poly(f, T1)
        out.extend([IntPoly(1, {e: int(c) for e, c in q.terms()})] * mult)
    return out


# -- localization --------------------------------------------------------------

@dataclass(frozen=True)
class LocalizedRelation:
    M: int
    index: int  # 1-based position in the factor list
    factor: IntPoly
    zero_sets: tuple[GoodSet, ...]

    def to_json(self) -> dict:
        return {
            "M": self.M,
            "index": self.index,
            "factor": str(self.factor),
            "zero_sets": [g.to_json() for g in self.zero_sets],
        }


def _ghost_values(measures: Sequence[MotivicMeasurePoly], horizon: int) -> list[list[list]]:
    """values[nu-1][j] = d_nu(measures[j]) as a polynomial in T."""
    per = [measure_ghosts(m, horizon) for m in measures]
    return [[per[j][nu] for j in range(len(measures))] for nu in range(horizon)]


def localize_irreducible_relation(
    measures: Sequence[MotivicMeasurePoly],
    factors: Sequence[IntPoly],
    horizon: int,
) -> LocalizedRelation | None:
    """Find M and a factor G with G(F_M mu_1, ..., F_M mu_n) = 0 on the horizon.

    The product of the factors must vanish at the measures.  Each factor's
    ghost zero set X_i is fitted as a good set; the answer is the least M whose
    multiples all fall in the periodic part of one X_i.  None if no factor's
    fitted description admits such an M.
    """
    n = len(measures)
    if any(f.n != n for f in factors):
        raise InvalidInputError("factor", f"factors must be polynomials in {n} variables")
    values = _ghost_values(measures, horizon)
    zero_sets = []
    for f in factors:
        zeros = {nu for nu in range(1, horizon + 1) if not f.evaluate(values[nu - 1])}
        zero_sets.append(zeros)
    missing = [nu for nu in range(1, horizon + 1) if not any(nu in z for z in zero_sets)]
    if missing:
        raise InvalidInputError(
            "relation", f"the product of the factors does not vanish at ghost index {missing[0]}"
        )
    try:
        goods = tuple(fit_good_set(z, horizon) for z in zero_sets)
    except Inconclusive:
        return None
    bound = lcm(*(g.modulus for g in goods))
    for M in range(1, min(bound, horizon) + 1):
        for i, g in enumerate(goods):
            orbit = {(k * M) % g.modulus for k in range(1, g.modulus + 1)}
            if orbit <= g.residues:
                # d_nu(G(F_M mu)) = d_(nu M)(G(mu)), re-checked pointwise
                assert all(k * M in zero_sets[i] for k in range(1, horizon // M + 1))
                return LocalizedRelation(M, i + 1, factors[i], goods)
    return None


# -- two curves ------------------------------------------------------------------

def _scale_inverse_roots(p: Sequence, s) -> list:
    """prod(1 - s a_i t) from prod(1 - a_i t)."""
    return [c * Fraction(s) ** k for k, c in enumerate(p)]


def _cyclotomic_part(p: Sequence, max_totient: int) -> tuple[list[int], list]:
    """Split off every Phi_d factor (d with phi(d) <= max_totient); return orders and cofactor."""
    p = poly.trim(poly.fracs(p))
    orders = []
    for d in orders_with_totient_at_most(max_totient):
        phi = list(cyclotomic_poly(d))
        while len(p) >= len(phi):
            quo, rem = poly.divmod_poly(p, phi)
            if rem:
                break
            p = quo
            orders.append(d)
    return orders, p


def prime_exponent(q: int) -> tuple[int, int]:
    f = sympy.factorint(q)
    if len(f) != 1:
        raise InvalidInputError("q", f"{q} is not a prime power")
    (p, n), = f.items()
    return p, n


def is_special(z: ZetaData) -> bool:
    """q is an even power of p and every Frobenius eigenvalue on H^1 is +sqrt(q)."""
    _, n = prime_exponent(z.q)
    if n % 2:
        return False
    r = sympy.integer_nthroot(z.q, 2)[0]
    target = OnePoly.from_full(poly.power([1, -r], 2 * z.genus))
    return z.numerator == target


def special_order(z: ZetaData) -> int | None:
    """Least M with X over k_M special, None if no extension makes it special."""
    _, n = prime_exponent(z.q)
    if z.genus == 0:
        return 1 if n % 2 == 0 else 2
    # inverse roots alpha^2 / q must all be roots of unity (Kronecker)
    sq = poly_frobenius(z.numerator, 2).full()
    unit = _scale_inverse_roots(sq, Fraction(1, z.q))
    orders, rest = _cyclotomic_part(poly.reverse(unit), 2 * z.genus)
    if len(rest) != 1:
        return None
    L = lcm(*orders)
    for M in range(1, 2 * L + 1):
        if is_special(base_change(z, M)):
            return M
    raise AssertionError("alpha^2/q are roots of unity but no special extension found")


def ratio_orders(z1: ZetaData, z2: ZetaData) -> list[int]:
    """Orders of the roots of unity among the ratios alpha_i / beta_j."""
    # alpha_i / conj(beta_j) = alpha_i beta_j / q, and the beta_j are closed under conjugation
    prod = poly_witt_mul(z1.numerator, z2.numerator).full()
    scaled = _scale_inverse_roots(prod, Fraction(1, z1.q))
    orders, _ = _cyclotomic_part(poly.reverse(scaled), len(scaled) - 1)
    return sorted(set(orders))


@dataclass(frozen=True)
class IsogenySearch:
    M: int | None  # least M with equal numerators over k_M, if found
    certified_absent: bool  # True if no M at all can work
    L: int | None
    note: str


def isogeny_order(z1: ZetaData, z2: ZetaData, M_max: int) -> IsogenySearch:
    if z1.genus != z2.genus:
        return IsogenySearch(None, True, None, "different genera")
    if z1.numerator == z2.numerator:
        return IsogenySearch(1, False, 1, "equal numerators")
    orders = ratio_orders(z1, z2)
    if not orders:
        return IsogenySearch(None, True, None, "no eigenvalue ratio is a root of unity")
    L = lcm(*orders)
    # if F_M works then so does gcd(M, L); so F_L decides, and the least M divides L
    if poly_frobenius(z1.numerator, L) != poly_frobenius(z2.numerator, L):
        return IsogenySearch(None, True, L, f"numerators differ after base change to degree {L}")
    for M in sympy.divisors(L):
        if M > M_max:
            return IsogenySearch(None, False, L, f"least isogeny degree exceeds M_max={M_max}")
        if poly_frobenius(z1.numerator, M) == poly_frobenius(z2.numerator, M):
            return IsogenySearch(M, False, L, f"numerators agree over k_{M}")
    raise AssertionError("unreachable: L itself works")


@dataclass(frozen=True)
class TwoCurvesVerdict:
    case: str  # IndependentCertified, BecomesSpecialBoth, IsogenousJacobians, Inconclusive
    M: int | None
    diagnostics: tuple[tuple[str, bool], ...]
    notes: tuple[str, ...] = ()

    def __str__(self) -> str:
        head = self.case if self.M is None else f"{self.case}({self.M})"
        return head

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "M": self.M,
            "diagnostics": [{"check": k, "holds": v} for k, v in self.diagnostics],
            "notes": list(self.notes),
        }


def trace_sequence(z: ZetaData, n: int) -> list[Fraction]:
    """a_nu = -tr(F^nu | H^1) for nu = 1..n."""
    return [-s for s in z.numerator.power_sums(n)]


def candidate_relation(q: int, a1, b1) -> IntPoly:
    """q (T2 - T1)^2 - (a1 - b1)(a1 T2 - b1 T1) + (a1 - b1)^2."""
    a1, b1 = int(a1), int(b1)
    d = a1 - b1
    terms = {
        (2, 0): q,
        (1, 1): -2 * q,
        (0, 2): q,
        (0, 1): -d * a1,
        (1, 0): d * b1,
        (0, 0): d * d,
    }
    return IntPoly(2, terms)


def ghost_sequence(z: ZetaData, n: int) -> list[list]:
    """d_nu of the measure as polynomials 1 + a_nu T + q^nu T^2."""
    a = trace_sequence(z, n)
    return [poly.trim([Fraction(1), a[nu - 1], Fraction(z.q) ** nu]) for nu in range(1, n + 1)]


def relation_holds(rel: IntPoly, zs: Sequence[ZetaData], horizon: int) -> bool:
    seqs = [ghost_sequence(z, horizon) for z in zs]
    return all(not rel.evaluate([s[nu] for s in seqs]) for nu in range(horizon))


def two_curve_diagnostics(z1: ZetaData, z2: ZetaData, horizon: int) -> list[tuple[str, bool]]:
    q = z1.q
    a, b = trace_sequence(z1, horizon), trace_sequence(z2, horizon)
    a1, b1 = a[0], b[0]
    out = []
    if a1 != b1:
        out.append(
            ("first: q(b_nu - a_nu)^2 = q^nu (a_1 - b_1)^2",
             all(q * (b[i] - a[i]) ** 2 == q ** (i + 1) * (a1 - b1) ** 2 for i in range(horizon)))
        )
        out.append(("second: b_1 a_nu = a_1 b_nu", all(b1 * a[i] == a1 * b[i] for i in range(horizon))))
        if a1 != 0 and b1 != 0:
            out.append(("platt: a_1^2 = 4 g(X_1)^2 q", a1 * a1 == 4 * z1.genus**2 * q))
            out.append(("platt: b_1^2 = 4 g(X_2)^2 q", b1 * b1 == 4 * z2.genus**2 * q))
        out.append(("candidate relation vanishes on ghosts", relation_holds(candidate_relation(q, a1, b1), [z1, z2], horizon)))
    else:
        out.append(("a_nu = b_nu", all(a[i] == b[i] for i in range(horizon))))
    return out


def classify_two_curves(z1: ZetaData, z2: ZetaData, M_max: int = 120, horizon: int = 50) -> TwoCurvesVerdict:
    if z1.q != z2.q:
        raise ValueError(f"curves over different fields: q={z1.q} and q={z2.q}")
    s1, s2 = special_order(z1), special_order(z2)
    special_M = lcm(s1, s2) if s1 is not None and s2 is not None else None
    iso = isogeny_order(z1, z2, M_max)
    diagnostics = tuple(two_curve_diagnostics(z1, z2, horizon))
    notes = [
        f"special orders: {s1}, {s2}",
        f"isogeny search: {iso.note}",
    ]
    candidates = []
    if iso.M is not None:
        candidates.append((iso.M, 0, "IsogenousJacobians"))
    if special_M is not None:
        candidates.append((special_M, 1, "BecomesSpecialBoth"))
    if candidates:
        M, _, case = min(candidates)
        return TwoCurvesVerdict(case, M, diagnostics, tuple(notes))
    if iso.certified_absent:
        return TwoCurvesVerdict("IndependentCertified", None, diagnostics, tuple(notes))
    return TwoCurvesVerdict("Inconclusive", None, diagnostics, tuple(notes))


def parse_numerator(text: str) -> list[int]:
    """CLI numerator: t^1..t^2g coefficients, or t^0..t^2g when odd-length with a leading 1."""
    text = text.strip()
    if not text:
        return [1]
    vals = [int(v) for v in text.replace("−", "-").split(",")]
    if len(vals) % 2 == 1:
        if vals[0] != 1:
            raise InvalidInputError("numerator", "an odd-length list must start with the constant 1")
        return vals
    return [1] + vals

