from fractions import Fraction
from itertools import product
from math import comb

import pytest

from skewsp.genus import genus_from_table
from skewsp.k3 import (K3Profile, LaurentPoly, TorusElement, build_k3_table, catalan,
                       k3_pluri_hodge, su2_invariant_dim, supertrace, trace_on_Hq)
from skewsp.reps import HodgeTable


def brute_invariants(m):
    """Zero-weight states minus weight-2 states in (C^2)^{(x) m}."""
    zero = sum(1 for s in product((1, -1), repeat=m) if sum(s) == 0)
    two = sum(1 for s in product((1, -1), repeat=m) if sum(s) == 2)
    return zero - two


def dyck_paths(k):
    count = 0
    for steps in product((1, -1), repeat=2 * k):
        h = 0
        for s in steps:
            h += s
            if h < 0:
                break
        else:
            count += h == 0
    return count


@pytest.mark.parametrize("m", range(0, 17))
def test_su2_invariants(m):
    got = su2_invariant_dim(m)
    if m <= 12:
        assert got == brute_invariants(m)
    if m % 2 == 0:
        assert got == catalan(m // 2) == dyck_paths(m // 2)
    else:
        assert got == 0


def test_su2_examples():
    assert [su2_invariant_dim(m) for m in (1, 2, 4)] == [0, 1, 2]


def test_pluri_hodge_examples():
    assert k3_pluri_hodge((1,), 1) == 20
    assert k3_pluri_hodge((1, 1, 1), 1) == 272
    assert k3_pluri_hodge((0,), 1) == 0
    assert k3_pluri_hodge((1,), 3) == 0
    assert k3_pluri_hodge((2, 0), 0) == k3_pluri_hodge((0, 0), 0) == 1
    assert K3Profile((1, 2, 1)).m == 2
    with pytest.raises(ValueError):
        K3Profile((3,))


def test_euler_characteristic_of_each_sheaf():
    for m in range(7):
        profile = (1,) * m
        chi = sum((-1) ** q * k3_pluri_hodge(profile, q) for q in range(3))
        assert chi == 2 ** (m + 1) * (1 - 6 * m)


def test_classical_diamond():
    t = build_k3_table(1)
    grid = [[t[((p,), q)] for q in range(3)] for p in range(3)]
    assert grid == [[1, 0, 1], [0, 20, 0], [1, 0, 1]]
    assert build_k3_table(3)[((1, 1, 1), 1)] == 272
    with pytest.raises(ValueError):
        build_k3_table(7)


def test_duality_and_serre_symmetry():
    t = build_k3_table(3)
    for p in product(range(3), repeat=3):
        assert t[(p, 0)] == t[(p, 2)]
        for i in range(3):
            dual = p[:i] + (2 - p[i],) + p[i + 1:]
            for q in range(3):
                assert t[(p, q)] == t[(dual, q)]


def test_trace_examples():
    t = build_k3_table(1)
    assert trace_on_Hq(TorusElement(1), 1, t) == LaurentPoly(1, {(0,): 20})
    ident = TorusElement(2, [1, 1])
    t2 = build_k3_table(2)
    for q in range(3):
        dim = sum(h for (p, qq), h in t2.items() if qq == q)
        assert trace_on_Hq(ident, q, t2).evaluate([1, 1]) == dim
    with pytest.raises(ValueError):
        trace_on_Hq(TorusElement(1), 1, t, parity="odd")


@pytest.mark.parametrize("g", [1, 2, 3])
def test_trace_invariant_under_inversion(g):
    t = build_k3_table(g)
    for q in range(3):
        for parity in ("+", "-", "both"):
            tr = trace_on_Hq(TorusElement(g), q, t, parity=parity)
            for i in range(g):
                assert tr.invert_variable(i) == tr


@pytest.mark.parametrize("g", [1, 2, 3])
def test_supertrace_is_the_genus(g):
    t = build_k3_table(g)
    st = supertrace(TorusElement(g), t)
    assert st.shift((1,) * g).terms == genus_from_table(t).terms


def test_supertrace_examples():
    t = build_k3_table(1)
    assert supertrace(TorusElement(1), t) == LaurentPoly(1, {(-1,): 2, (0,): 20, (1,): 2})
    assert supertrace(TorusElement(1, [1]), t).evaluate([1]) == 24
    assert supertrace(TorusElement(1, [Fraction(1, 2)]), t).evaluate([1]) == 4 + 20 + 1
    assert supertrace(TorusElement(1), HodgeTable(1, 1)) == LaurentPoly(1)


def test_catalan():
    assert [catalan(k) for k in range(6)] == [1, 1, 2, 5, 14, 42]
    assert all(catalan(k) == comb(2 * k, k) - comb(2 * k, k + 1) for k in range(1, 9))
