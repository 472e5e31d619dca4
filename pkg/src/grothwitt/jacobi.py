"""Characters of diagonalizable groups and the Jacobian independence test.

A representation of a group whose character lattice is ``Z/M x Z^m`` has as
character a Laurent polynomial in ``T_1..T_m`` with coefficients in
``Z[S]/(S^M - 1)``.  Characters ``f_1..f_n`` are algebraically independent iff
for some ring map ``S -> zeta_d`` and some rational point the Jacobian
``(df_i/dT_j)`` has rank n; they are dependent iff the Jacobian has rank < n
under every such map.  Every homomorphism out of ``Z[S]/(S^M - 1)`` into a
field of characteristic zero factors through one of the ``Phi_d`` with
``d | M``, so it is enough to try one primitive root per divisor.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import sympy

from .cyclotomic import CyclotomicNumber, rank

Exponent = tuple[int, ...]


def _ga_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def _ga_scale(a: tuple[int, ...], k: int) -> tuple[int, ...]:
    return tuple(k * x for x in a)


def _ga_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    M = len(a)
    out = [0] * M
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[(i + j) % M] += x * y
    return tuple(out)


@dataclass(frozen=True)
class GroupLaurentPoly:
    """``sum_e c_e T^e`` with ``c_e`` in Z[S]/(S^M - 1) stored as length-M tuples."""

    M: int
    m: int
    terms: Mapping[Exponent, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in dict(self.terms).items():
            e, c = tuple(int(v) for v in e), tuple(int(v) for v in c)
            if len(e) != self.m or len(c) != self.M:
                raise ValueError("exponent or coefficient has the wrong length")
            if any(c):
                clean[e] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GroupLaurentPoly") -> "GroupLaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = _ga_add(out.get(e, (0,) * self.M), c)
        return GroupLaurentPoly(self.M, self.m, out)

    def __mul__(self, other: "GroupLaurentPoly") -> "GroupLaurentPoly":
        out: dict[Exponent, tuple[int, ...]] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _ga_add(e1, e2)
                out[e] = _ga_add(out.get(e, (0,) * self.M), _ga_mul(c1, c2))
        return GroupLaurentPoly(self.M, self.m, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupLaurentPoly)
            and (self.M, self.m) == (other.M, other.m)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.M, self.m, tuple(self.terms.items())))

    def derivative(self, j: int) -> "GroupLaurentPoly":
        """d/dT_j with the Laurent power rule."""
        out: dict[Exponent, tuple[int, ...]] = {}
        for e, c in self.terms.items():
            if e[j]:
                e2 = e[:j] + (e[j] - 1,) + e[j + 1 :]
                out[e2] = _ga_add(out.get(e2, (0,) * self.M), _ga_scale(c, e[j]))
        return GroupLaurentPoly(self.M, self.m, out)

    def specialize(self, d: int, point: Sequence) -> CyclotomicNumber:
        """Value under S -> zeta_d and T -> point."""
        acc = CyclotomicNumber.of(d, 0)
        for e, c in self.terms.items():
            mono = Fraction(1)
            for x, k in zip(point, e):
                mono *= Fraction(x) ** k
            acc = acc + _ga_at(c, d) * mono
        return acc

    def specialize_symbolic(self, d: int) -> dict[Exponent, CyclotomicNumber]:
        """Laurent polynomial over Q(zeta_d) under S -> zeta_d."""
        out = {}
        for e, c in self.terms.items():
            v = _ga_at(c, d)
            if not v.is_zero():
                out[e] = v
        return out

    def __str__(self) -> str:
        parts = []
        for e, c in self.terms.items():
            coeff = _ga_str(c)
            mono = "*".join(
                (f"T{j + 1}" if k == 1 else f"T{j + 1}^{k}") for j, k in enumerate(e) if k
            )
            if not mono:
                parts.append(coeff if " " not in coeff else f"({coeff})")
            elif coeff in ("1", "-1", "S", "-S") or coeff.lstrip("-").startswith("S^"):
                parts.append(mono if coeff == "1" else f"-{mono}" if coeff == "-1" else f"{coeff}*{mono}")
            else:
                parts.append(f"({coeff})*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _ga_str(c: tuple[int, ...]) -> str:
    parts = []
    for i, k in enumerate(c):
        if not k:
            continue
        if i == 0:
            parts.append(str(k))
            continue
        s = "S" if i == 1 else f"S^{i}"
        parts.append(s if k == 1 else f"-{s}" if k == -1 else f"{k}*{s}")
    return " + ".join(parts).replace("+ -", "- ")


def _ga_at(c: tuple[int, ...], d: int) -> CyclotomicNumber:
    acc = CyclotomicNumber.of(d, 0)
    for k, x in enumerate(c):
        if x:
            acc = acc + CyclotomicNumber.zeta_power(d, k) * x
    return acc


@dataclass(frozen=True)
class MonomialEigenvalue:
    """``zeta^torsion_exp * pi_1^free_exps[0] * ... * pi_N^free_exps[N-1]`` with zeta of order M."""

    torsion_exp: int
    free_exps: tuple[int, ...]
    M: int = 1

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("torsion order must be >= 1")
        object.__setattr__(self, "torsion_exp", int(self.torsion_exp) % self.M)
        object.__setattr__(self, "free_exps", tuple(int(v) for v in self.free_exps))

    def power(self, L: int) -> "MonomialEigenvalue":
        return MonomialEigenvalue(self.torsion_exp * L, tuple(L * v for v in self.free_exps), self.M)


def char_from_eigenvalues(eigs: Sequence[Sequence[MonomialEigenvalue]]) -> list[GroupLaurentPoly]:
    flat = [e for rep in eigs for e in rep]
    if not flat:
        return [GroupLaurentPoly(1, 0) for _ in eigs]
    M, N = flat[0].M, len(flat[0].free_exps)
    if any(e.M != M or len(e.free_exps) != N for e in flat):
        raise ValueError("eigenvalues disagree on the torsion order or basis length")
    out = []
    for rep in eigs:
        terms: dict[Exponent, tuple[int, ...]] = {}
        for e in rep:
            unit = tuple(1 if i == e.torsion_exp else 0 for i in range(M))
            terms[e.free_exps] = _ga_add(terms.get(e.free_exps, (0,) * M), unit)
        out.append(GroupLaurentPoly(M, N, terms))
    return out


def jacobian(fs: Sequence[GroupLaurentPoly]) -> list[list[GroupLaurentPoly]]:
    return [[f.derivative(j) for j in range(f.m)] for f in fs]


def specialize(J: Sequence[Sequence[GroupLaurentPoly]], d: int, point: Sequence) -> list[list[CyclotomicNumber]]:
    return [[entry.specialize(d, point) for entry in row] for row in J]


# -- symbolic minors over Q(zeta_d)[T^(+-1)] ---------------------------------

def _lp_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = _ga_add(e1, e2)
            out[e] = out[e] + c1 * c2 if e in out else c1 * c2
    return {e: c for e, c in out.items() if not c.is_zero()}


def _lp_add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for e, c in b.items():
        c = c * sign
        out[e] = out[e] + c if e in out else c
    return {e: c for e, c in out.items() if not c.is_zero()}


def _lp_det(m: list[list[dict]]) -> dict:
    n = len(m)
    total: dict = {}
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i, j in itertools.combinations(range(n), 2))
        sign = -1 if inversions % 2 else 1
        term = m[0][perm[0]]
        for i in range(1, n):
            term = _lp_mul(term, m[i][perm[i]])
            if not term:
                break
        total = _lp_add(total, term, sign)
    return total


def symbolic_minors_vanish(J: Sequence[Sequence[GroupLaurentPoly]], d: int) -> bool:
    n = len(J)
    m = len(J[0]) if n else 0
    sym = [[entry.specialize_symbolic(d) for entry in row] for row in J]
    for cols in itertools.combinations(range(m), n):
        if _lp_det([[row[c] for c in cols] for row in sym]):
            return False
    return True


@dataclass(frozen=True)
class IndependenceVerdict:
    status: str  # "independent", "dependent" or "inconclusive"
    d: int | None = None
    point: tuple | None = None
    matrix: tuple | None = None
    trials: int = 0
    note: str = ""

    def to_json(self) -> dict:
        out = {"status": self.status, "trials": self.trials}
        if self.d is not None:
            out["phi"] = f"S -> zeta_{self.d}"
            out["point"] = [str(x) for x in self.point]
            out["matrix"] = [[str(x) for x in row] for row in self.matrix]
        if self.note:
            out["note"] = self.note
        return out


def independence_witness(
    fs: Sequence[GroupLaurentPoly],
    trial_budget: int = 100,
    seed: int = 0,
    points: Iterable[Sequence] = (),
) -> IndependenceVerdict:
    """Search for a certificate of algebraic independence (or dependence).

    ``points`` are tried first, under every specialization, before the
    seeded random points.
    """
    n = len(fs)
    if n == 0:
        return IndependenceVerdict("independent", note="the empty family is independent")
    M, m = fs[0].M, fs[0].m
    if any(f.M != M or f.m != m for f in fs):
        raise ValueError("characters live in different rings")
    if n > m:
        return IndependenceVerdict("dependent", note=f"{n} characters in {m} variables")
    J = jacobian(fs)
    divisors = sympy.divisors(M)
    if n <= 3 and all(symbolic_minors_vanish(J, d) for d in divisors):
        return IndependenceVerdict("dependent", note="all maximal minors vanish identically")

    rng = random.Random(seed)

    def draw():
        while True:
            yield tuple(rng.choice((-1, 1)) * rng.randint(1, 1000) for _ in range(m))

    candidates = itertools.chain((tuple(p) for p in points), itertools.islice(draw(), trial_budget))
    trials = 0
    for point in candidates:
        trials += 1
        for d in divisors:
            mat = specialize(J, d, point)
            if rank(mat) == n:
                return IndependenceVerdict(
                    "independent",
                    d,
                    tuple(point),
                    tuple(tuple(row) for row in mat),
                    trials,
                )
    return IndependenceVerdict("inconclusive", trials=trials, note="no full-rank specialization found")


def verify_witness(fs: Sequence[GroupLaurentPoly], verdict: IndependenceVerdict) -> bool:
    """Recompute the specialized Jacobian at the stored witness and check its rank."""
    if verdict.status != "independent" or verdict.d is None:
        return False
    return rank(specialize(jacobian(fs), verdict.d, verdict.point)) == len(fs)


def substitute_monomial(f: GroupLaurentPoly, U: Sequence[Sequence[int]]) -> GroupLaurentPoly:
    """Change of variables ``T_j -> prod_k T_k^U[j][k]``: exponent e becomes e U."""
    terms: dict[Exponent, tuple[int, ...]] = {}
    for e, c in f.terms.items():
        new = tuple(sum(e[j] * U[j][k] for j in range(f.m)) for k in range(f.m))
        terms[new] = _ga_add(terms.get(new, (0,) * f.M), c)
    return GroupLaurentPoly(f.M, f.m, terms)


@dataclass(frozen=True)
class LatticeVerdict:
    dims: tuple[int, ...]
    geometrically_independent: bool


def lattice_dims(reps: Sequence[Sequence[MonomialEigenvalue]]) -> LatticeVerdict:
    """Ranks d_k of the Q-span of the eigenvalues of the first k representations.

    Torsion is invisible after tensoring with Q.  Strict growth
    ``0 < d_1 < ... < d_n`` is sufficient for geometric independence.
    """
    flat = [e for rep in reps for e in rep]
    if flat and any(len(e.free_exps) != len(flat[0].free_exps) for e in flat):
        raise ValueError("eigenvalues use bases of different lengths")
    dims = []
    rows: list[tuple[int, ...]] = []
    for rep in reps:
        rows.extend(e.free_exps for e in rep)
        dims.append(int(sympy.Matrix(rows).rank()) if rows and rows[0] else 0)
    ok = all(b > a for a, b in zip([0] + dims, dims))
    return LatticeVerdict(tuple(dims), ok)


# -- JSON --------------------------------------------------------------------

def reps_from_json(obj) -> list[list[MonomialEigenvalue]]:
    if isinstance(obj, str):
        obj = json.loads(obj)
    M = int(obj.get("M", 1))
    N = obj.get("N")
    reps = []
    for rep in obj["reps"]:
        eigs = []
        for e in rep:
            if N is not None and len(e["e"]) != int(N):
                raise ValueError(f"exponent vector {e['e']} does not have length {N}")
            eigs.append(MonomialEigenvalue(int(e.get("t", 0)), tuple(e["e"]), M))
        reps.append(eigs)
    return reps


def reps_to_json(reps: Sequence[Sequence[MonomialEigenvalue]]) -> dict:
    flat = [e for rep in reps for e in rep]
    M = flat[0].M if flat else 1
    N = len(flat[0].free_exps) if flat else 0
    return {
        "M": M,
        "N": N,
        "reps": [[{"t": e.torsion_exp, "e": list(e.free_exps)} for e in rep] for rep in reps],
    }
