import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy

from skewsp.genus import (ChernMonomialValue, ChernSeries, GenusPolynomial, chern_monomial_keys,
                          chern_numbers_from_genus, cstring_identity, elementary_symmetric_extract,
                          evaluate_surface_rr, exp_neg_root, genus_from_chern_numbers,
                          genus_from_table, todd_series)
from skewsp.k3 import build_k3_table
from skewsp.reps import HodgeTable


def to_sympy(series, xs, ts=()):
    out = 0
    for (xe, te), c in series.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for x, k in zip(xs, xe):
            term *= x ** k
        for t, k in zip(ts, te):
            term *= t ** k
        out += term
    return sympy.expand(out)


def truncate(expr, xs, n):
    poly = sympy.Poly(sympy.expand(expr), *xs)
    return sympy.expand(sum(c * sympy.prod(x ** k for x, k in zip(xs, m))
                            for m, c in poly.terms() if sum(m) <= n))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_todd_against_sympy_series(n):
    xs = sympy.symbols(f"x1:{n + 1}")
    s = sympy.Symbol("s")
    one = sympy.series(s / (1 - sympy.exp(-s)), s, 0, n + 1).removeO()
    oracle = truncate(sympy.prod(one.subs(s, x) for x in xs), xs, n)
    assert to_sympy(todd_series(n), xs) == oracle


def test_todd_low_degree():
    assert todd_series(1) == ChernSeries(1, 0, {((0,), ()): 1, ((1,), ()): Fraction(1, 2)})
    deg2 = elementary_symmetric_extract(todd_series(2).root_degree_part(2))
    assert deg2 == ChernMonomialValue({(1, 1): Fraction(1, 12), (2,): Fraction(1, 12)})
    with pytest.raises(ValueError):
        todd_series(7)


def test_elementary_symmetric_extract():
    n = 3
    assert elementary_symmetric_extract({(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}) == \
        ChernMonomialValue.monomial((2,))
    assert elementary_symmetric_extract({(1, 0): 1, (0, 1): 1}) == ChernMonomialValue.monomial((1,))
    for i in range(1, n + 1):
        poly = {}
        for keep in combinations(range(n), i):
            e = tuple(1 if k in keep else 0 for k in range(n))
            poly[e] = 1
        assert elementary_symmetric_extract(poly, n) == ChernMonomialValue.monomial((i,))
    # power sum x1^2 + x2^2 = c1^2 - 2 c2
    assert elementary_symmetric_extract({(2, 0): 1, (0, 2): 1}) == \
        ChernMonomialValue({(1, 1): 1, (2,): -2})
    with pytest.raises(ValueError):
        elementary_symmetric_extract({(1, 0): 1})


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("g", [1, 2])
def test_cstring(n, g):
    for qs, (got, want) in cstring_identity(n, g).items():
        assert got == want, qs


@pytest.mark.parametrize("n", [1, 2, 3])
def test_expand_is_multilinear(n):
    # prod (a_i + t e_i) = sum_S t^|S| prod_{i in S} e_i prod_{i not in S} a_i
    t = ChernSeries.genus_var(n, 1, 1)
    es = [exp_neg_root(n, 1, r) for r in range(1, n + 1)]
    lhs = ChernSeries.constant(n, 1)
    for e in es:
        lhs = lhs * ((1 - e) + t * e)
    rhs = ChernSeries(n, 1)
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            term = t ** size
            for i, e in enumerate(es):
                term = term * (e if i in subset else 1 - e)
            rhs = rhs + term
    assert lhs == rhs
    xs = sympy.symbols(f"x1:{n + 1}")
    ts = (sympy.Symbol("t"),)
    oracle = sympy.prod((1 - sympy.exp(-x)) + ts[0] * sympy.exp(-x) for x in xs)
    oracle = sympy.expand(sympy.series(oracle.subs({x: sympy.Symbol("u") * x for x in xs}),
                                       sympy.Symbol("u"), 0, n + 1).removeO().subs(
                                           sympy.Symbol("u"), 1))
    assert to_sympy(lhs, xs, ts) == truncate(oracle, xs, n)


@pytest.mark.parametrize("m", range(9))
def test_surface_rr(m):
    assert evaluate_surface_rr(m) == 2 ** (m + 1) * (1 - 6 * m)


def test_surface_rr_examples_and_guard():
    assert [evaluate_surface_rr(m) for m in (0, 1, 3)] == [2, -20, -272]
    with pytest.raises(ValueError):
        evaluate_surface_rr(9)


def test_genus_from_table():
    t = build_k3_table(1)
    poly = genus_from_table(t)
    assert poly == GenusPolynomial(1, {(0,): 2, (1,): 20, (2,): 2})
    assert poly.evaluate([1]) == 24
    # alternating sum of all Hodge numbers: 1 + 1 + 1 + 1 - 20
    assert poly.evaluate([-1]) == -16
    assert genus_from_table(HodgeTable(1, 1)) == GenusPolynomial(1)


def test_k3_genus_matches_riemann_roch():
    for g in (1, 2, 3):
        table = genus_from_table(build_k3_table(g)).in_basis("one-minus-y")
        symbolic = genus_from_chern_numbers(2, g, {(2,): 24, (1, 1): 0})
        assert table == symbolic
    g2 = genus_from_chern_numbers(2, 2, {(2,): 24, (1, 1): 0})
    assert g2.terms[(2, 0)] == g2.terms[(0, 2)] == 24
    assert (1, 1) not in g2.terms
    # only g = 1 sees c_n at y = 1
    assert genus_from_table(build_k3_table(2)).evaluate([1, 1]) == 0


def test_basis_change_is_an_involution():
    p = GenusPolynomial(2, {(2, 1): 3, (0, 0): Fraction(1, 2), (1, 0): -1})
    assert p.change_basis().change_basis() == p
    assert p.change_basis().evaluate([0, 0]) == p.evaluate([1, 1])


def test_json_format():
    p = GenusPolynomial(2, {(1, 0): Fraction(-1, 3)})
    assert p.to_json() == {"basis": "y", "g": 2, "terms": {"1,0": "-1/3"}}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cobordism_equivalence(n):
    rng = random.Random(n)
    keys = chern_monomial_keys(n)
    for _ in range(10):
        a = {k: rng.randint(-5, 5) for k in keys}
        b = dict(a)
        if rng.random() < 0.5:
            k = rng.choice(keys)
            b[k] += rng.choice((-1, 1))
        ga = genus_from_chern_numbers(n, n, a)
        gb = genus_from_chern_numbers(n, n, b)
        assert (ga == gb) == (a == b)
        assert chern_numbers_from_genus(n, ga) == {k: Fraction(v) for k, v in a.items()}
