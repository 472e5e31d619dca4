"""Characteristic polynomials of direct sums, tensor products and induced blocks.

For endomorphisms phi, psi the reversed characteristic polynomials satisfy

    det(1 - (phi + psi) t) = det(1 - phi t) * det(1 - psi t)       (Lambda-sum)
    det(1 - (phi x psi) t) = det(1 - phi t) Lambda-times det(1 - psi t)

and the block-cyclic matrix inducing A from an index-nu subgroup has
``det(1 - pi t) = det(1 - A t^nu)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy

Matrix = Sequence[Sequence[int]]


def det_one_minus(A: Matrix) -> list[Fraction]:
    """Coefficients of det(1 - A t), constant term first.

    If det(x - A) = x^n + c_1 x^(n-1) + ... + c_n then
    det(1 - A t) = 1 + c_1 t + ... + c_n t^n; sympy supplies the c_i.
    """
    if len(A) == 0:
        return [Fraction(1)]
    coeffs = [Fraction(int(c.p), int(c.q)) for c in sympy.Matrix(A).charpoly().all_coeffs()]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def direct_sum(A: Matrix, B: Matrix) -> list[list[int]]:
    n, m = len(A), len(B)
    out = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        out[i][:n] = list(A[i])
    for i in range(m):
        out[n + i][n:] = list(B[i])
    return out


def kron(A: Matrix, B: Matrix) -> list[list[int]]:
    n, m = len(A), len(B)
    return [[A[i // m][j // m] * B[i % m][j % m] for j in range(n * m)] for i in range(n * m)]


def block_induction(A: Matrix, nu: int) -> list[list[int]]:
    """pi(v_1, ..., v_nu) = (A v_nu, v_1, ..., v_(nu-1)), so pi^nu acts as A on each block."""
    n = len(A)
    N = n * nu
    out = [[0] * N for _ in range(N)]
    for b in range(1, nu):
        for i in range(n):
            out[b * n + i][(b - 1) * n + i] = 1
    for i in range(n):
        for j in range(n):
            out[i][(nu - 1) * n + j] = A[i][j]
    return out
