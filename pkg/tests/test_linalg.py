from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from skewsp.linalg import EchelonBasis, inverse, matmul, nullspace, rank

small = st.integers(min_value=-3, max_value=3)
matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def as_rows(m):
    return [{j: Fraction(x) for j, x in enumerate(row) if x} for row in m]


@given(matrices)
def test_rank_matches_sympy(m):
    assert rank(as_rows(m)) == sympy.Matrix(m).rank()


@given(matrices)
def test_nullspace_is_kernel_of_full_dimension(m):
    ncols = len(m[0])
    kernel = nullspace(as_rows(m), ncols)
    assert len(kernel) == ncols - sympy.Matrix(m).rank()
    for vec in kernel:
        for row in m:
            assert sum(row[j] * vec.get(j, 0) for j in range(ncols)) == 0


def test_echelon_membership():
    basis = EchelonBasis()
    assert basis.add({0: 1, 1: 2})
    assert not basis.add({0: Fraction(1, 2), 1: 1})
    assert basis.contains({0: 3, 1: 6})
    assert not basis.contains({1: 1})
    assert basis.rank == 1


def test_inverse_of_standard_form():
    eps = [[0, 1], [-1, 0]]
    assert [list(r) for r in inverse(eps)] == [[0, -1], [1, 0]]


def test_matmul_composes_right_to_left():
    a = {0: {1: 1}}          # e0 -> e1
    b = {1: {0: 2}}          # e1 -> 2 e0
    assert matmul(a, b) == {1: {1: 2}}
