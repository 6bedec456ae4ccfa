"""Exact Smith normal form over the integers and p-local linear solving."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ._arith import valuation

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(S, D, T)`` with ``S A T = D``.

    S and T are unimodular; D is diagonal with nonnegative entries
    ``d_0 | d_1 | ...`` followed by zeros.
    """
    D = [list(map(int, row)) for row in A]
    m = len(D)
    n = len(D[0]) if m else 0
    S, T = _identity(m), _identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        S[i], S[j] = S[j], S[i]

    def swap_cols(i, j):
        for M_ in (D, T):
            for row in M_:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        for M_ in (D, S):
            rs, rd = M_[src], M_[dst]
            for k in range(len(rd)):
                rd[k] += q * rs[k]

    def add_col(src, dst, q):  # col dst += q * col src
        for M_ in (D, T):
            for row in M_:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            done = True
            for i in range(t + 1, m):
                q = D[i][t] // D[t][t]
                if q:
                    add_row(t, i, -q)
                if D[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = D[t][j] // D[t][t]
                if q:
                    add_col(t, j, -q)
                if D[t][j]:
                    done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            S[t] = [-x for x in S[t]]
    return S, D, T


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def solve_plocal(A: Sequence[Sequence[int]], b: Sequence[int], p: int) -> list[Fraction] | None:
    """A solution of ``A x = b`` with every entry in Z_(p), or ``None``.

    With ``S A T = D`` the system becomes ``D y = S b``, ``x = T y``.  Since T
    is unimodular, x is p-integral iff y is, so a solution exists iff each
    nonzero ``d_i`` has p-valuation at most that of ``(S b)_i`` and the rows
    beyond the rank have ``(S b)_i = 0``.  Free coordinates of y are set to 0.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S, D, T = smith_normal_form(A)
    c = [sum(S[i][k] * b[k] for k in range(m)) for i in range(m)]
    y = [Fraction(0)] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if c[i]:
                return None
            continue
        if c[i] and valuation(d, p) > valuation(c[i], p):
            return None
        y[i] = Fraction(c[i], d)
    return [sum((T[i][k] * y[k] for k in range(n)), Fraction(0)) for i in range(n)]
