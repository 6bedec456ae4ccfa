from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hyperinduct.snf import matmul, smith_normal_form, solve_plocal

small = st.integers(-9, 9)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)))


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_snf_properties(A):
    S, D, T = smith_normal_form(A)
    assert matmul(matmul(S, A), T) == D
    assert abs(sympy.Matrix(S).det()) == 1
    assert abs(sympy.Matrix(T).det()) == 1
    m, n = len(A), len(A[0])
    diag = [D[i][i] for i in range(min(m, n))]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)
    assert sum(1 for d in diag if d) == sympy.Matrix(A).rank()


def test_snf_example():
    S, D, T = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [D[i][i] for i in range(3)] == [2, 6, 12]


def test_plocal_examples():
    assert solve_plocal([[2]], [1], 2) is None
    assert solve_plocal([[2]], [1], 3) == [Fraction(1, 2)]
    assert solve_plocal([[0]], [1], 3) is None
    assert solve_plocal([[0]], [0], 3) == [Fraction(0)]
    x = solve_plocal([[6, 3, 2], [0, 1, 0], [0, 0, 2]], [1, 1, 1], 3)
    assert x == [Fraction(-1, 2), Fraction(1), Fraction(1, 2)]


def _pintegral(x, p):
    return all(Fraction(v).denominator % p for v in x)


@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
                        st.lists(small, min_size=n, max_size=n))),
       st.sampled_from([2, 3, 5]))
@settings(max_examples=300, deadline=None)
def test_plocal_against_rational_solve(Ab, p):
    A, b = Ab
    M = sympy.Matrix(A)
    x = solve_plocal(A, b, p)
    if M.det() != 0:
        exact = [Fraction(int(v.p), int(v.q)) for v in M.LUsolve(sympy.Matrix(b))]
        assert (x is not None) == _pintegral(exact, p)
        if x is not None:
            assert x == exact
    elif x is not None:
        assert matmul(A, [[v] for v in x]) == [[v] for v in b]
        assert _pintegral(x, p)
