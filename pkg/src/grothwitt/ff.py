"""Finite fields GF(p^n) in a polynomial basis.

Elements are encoded as integers ``0 <= code < p^n``: the base-p digits of the
code are the coefficients of ``1, x, ..., x^(n-1)`` modulo the defining
polynomial.  Scalar arithmetic works on codes directly; bulk arithmetic over
numpy arrays of codes goes through discrete log/exp tables that are built
lazily the first time they are needed.
"""

from __future__ import annotations

import json
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
import sympy

from .errors import BudgetExceeded


def _digits(code: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _code(digits: Sequence[int], p: int) -> int:
    acc = 0
    for d in reversed(digits):
        acc = acc * p + (d % p)
    return acc


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic m, coefficients mod p."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            for j in range(dm + 1):
                a[k - dm + j] = (a[k - dm + j] - c * m[j]) % p
    a = a[:dm] if len(a) > dm else a
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic_divides(m: list[int], f: list[int], p: int) -> bool:
    return not _pmod(f, m, p)


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division of the monic f by every monic polynomial of degree <= deg(f)/2."""
    f = [c % p for c in f]
    n = len(f) - 1
    if n <= 1:
        return n == 1
    for d in range(1, n // 2 + 1):
        for low in range(p**d):
            if _monic_divides(_digits(low, p, d) + [1], f, p):
                return False
    return True


class FieldSpec:
    """GF(p^n) with a fixed monic irreducible modulus (coefficients of 1, x, ..., x^n)."""

    def __init__(self, p: int, n: int, modulus: Sequence[int]):
        if not sympy.isprime(p):
            raise ValueError(f"{p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if n > 1 and not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.n = n
        self.modulus = tuple(modulus)
        self.q = p**n

    def __repr__(self):
        return f"FieldSpec(p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.n, self.modulus) == (
            other.p,
            other.n,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    # -- encoding ------------------------------------------------------------

    def coeffs(self, a: int) -> list[int]:
        return _digits(a, self.p, self.n)

    def element(self, coeffs: Iterable[int] | int) -> int:
        if isinstance(coeffs, (int, np.integer)):
            coeffs = [int(coeffs)]
        coeffs = [int(c) for c in coeffs]
        # reduce in case a longer vector is supplied
        return _code(_pmod(coeffs, list(self.modulus), self.p) if len(coeffs) > self.n else coeffs, self.p)

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        return _code([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))], p)

    def neg(self, a: int) -> int:
        return _code([-x for x in self.coeffs(a)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        da, db = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return _code(_pmod(prod, list(self.modulus), self.p), self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(a, self.q - 2)

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def trace(self, a: int) -> int:
        """Absolute trace to GF(p), returned as an integer in 0..p-1."""
        acc, x = 0, a
        for _ in range(self.n):
            acc = self.add(acc, x)
            x = self.frobenius(x)
        assert acc < self.p
        return acc

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        m = self.q - 1
        for ell in sympy.factorint(m):
            while m % ell == 0 and self.pow(a, m // ell) == 1:
                m //= ell
        return m

    @cached_property
    def generator(self) -> int:
        """Smallest code whose multiplicative order is q - 1."""
        m = self.q - 1
        maximal = [m // ell for ell in sympy.factorint(m)]
        for g in range(1, self.q):
            if all(self.pow(g, e) != 1 for e in maximal):
                return g
        raise AssertionError("no generator found; modulus is not irreducible")

    def enumerate(self) -> range:
        return range(self.q)

    # -- bulk arithmetic -----------------------------------------------------

    @cached_property
    def digit_table(self) -> np.ndarray:
        codes = np.arange(self.q, dtype=np.int64)
        out = np.empty((self.q, self.n), dtype=np.int64)
        for i in range(self.n):
            codes, out[:, i] = np.divmod(codes, self.p)
        return out

    @cached_property
    def _place(self) -> np.ndarray:
        return self.p ** np.arange(self.n, dtype=np.int64)

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        q = self.q
        exp = np.empty(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        g, x = self.generator, 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self.mul(x, g)
        assert x == 1
        return exp, log

    @property
    def exp_table(self) -> np.ndarray:
        return self._tables[0]

    @property
    def log_table(self) -> np.ndarray:
        return self._tables[1]

    def vadd(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.n == 1:
            return (a + b) % self.p
        d = self.digit_table
        return ((d[a] + d[b]) % self.p) @ self._place

    def vmul(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.n == 1:
            return a * b % self.p
        exp, log = self._tables
        a, b = np.broadcast_arrays(a, b)
        zero = (a == 0) | (b == 0)
        idx = (log[a] + log[b]) % (self.q - 1)
        return np.where(zero, 0, exp[idx])

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if self.n == 1:
            return np.array([pow(int(v), e, self.p) for v in a.ravel()], dtype=np.int64).reshape(a.shape)
        exp, log = self._tables
        return np.where(a == 0, 0, exp[(log[a] * e) % (self.q - 1)])

    @cached_property
    def trace_table(self) -> np.ndarray:
        basis = [self.trace(self.pow(self.element([0, 1]) if self.n > 1 else 1, i)) for i in range(self.n)]
        return (self.digit_table @ np.array(basis, dtype=np.int64)) % self.p

    # -- embeddings ----------------------------------------------------------

    def embedding_root(self, sub: "FieldSpec") -> int:
        """Smallest code in self that is a root of sub's modulus (fixes sub -> self)."""
        if sub.p != self.p or self.n % sub.n:
            raise ValueError(f"GF({sub.q}) does not embed in GF({self.q})")
        if sub.n == 1:
            return 1
        m = sub.modulus
        for r in range(self.q):
            acc = 0
            for c in reversed(m):
                acc = self.add(self.mul(acc, r), c)
            if acc == 0:
                return r
        raise AssertionError("subfield modulus has no root")

    def embed(self, sub: "FieldSpec", a: int, root: int | None = None) -> int:
        if root is None:
            root = self.embedding_root(sub)
        acc = 0
        for c in reversed(sub.coeffs(a)):
            acc = self.add(self.mul(acc, root), c)
        return acc

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, obj: dict | str) -> "FieldSpec":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["p"]), int(obj["n"]), obj["modulus"])


_CACHE: dict[tuple[int, int, int], FieldSpec] = {}


def field_make(p: int, n: int = 1, seed: int = 0, budget: int | None = None) -> FieldSpec:
    """GF(p^n) with the first irreducible modulus at or after ``seed``.

    Monic candidates ``x^n + c_(n-1) x^(n-1) + ... + c_0`` are ordered by the
    code ``sum c_i p^i`` and scanned cyclically from ``seed mod p^n``.
    """
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if budget is not None and p**n > budget:
        raise BudgetExceeded(f"GF({p}^{n}) exceeds the enumeration budget {budget}")
    key = (p, n, seed)
    if key in _CACHE:
        return _CACHE[key]
    if n == 1:
        spec = FieldSpec(p, 1, [1, 1])
    else:
        total = p**n
        for k in range(total):
            low = (seed + k) % total
            cand = _digits(low, p, n) + [1]
            if is_irreducible(cand, p):
                spec = FieldSpec.__new__(FieldSpec)
                spec.p, spec.n, spec.modulus, spec.q = p, n, tuple(cand), total
                break
        else:  # pragma: no cover - irreducibles of every degree exist
            raise AssertionError("no irreducible polynomial found")
    _CACHE[key] = spec
    return spec
