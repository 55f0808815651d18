from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skewsp.exalg import Multivector, SymplecticForm, grade_split
from skewsp.reps import sp_irrep_dim
from skewsp.spops import (Exp, GroupElementFactored, GuardError, H, L, Lam, OperatorExpr,
                          SpVGenerator, Torus, apply_generator, apply_group_element, apply_spv,
                          check_commuting_actions, check_guard, check_sp_relations,
                          invariant_subspace, sp_relations, spv_spanning_set, weyl_reflection)


def v(n, g, *gens):
    return Multivector.monomial(n, g, gens)


def test_generator_examples():
    one = Multivector.one(1, 1)
    assert apply_generator(L(1, 1), one) == v(1, 1, (1, 1), (1, 2))
    assert apply_generator(H(1, 1), one) == Multivector.zero(1, 1)
    assert apply_generator(Lam(1, 1), v(1, 1, (1, 1), (1, 2))) == one


def test_h_counts_degree():
    a = v(2, 2, (1, 1), (1, 3), (2, 4))
    assert apply_generator(H(1, 1), a) == a * 2
    assert apply_generator(H(2, 2), a) == a


@pytest.mark.parametrize("n,g", [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)])
def test_relations_hold(n, g):
    report = check_sp_relations(n, g)
    assert report.passed, report.failures()


def test_relation_count():
    # one bracket per unordered pair of the g(2g+1) = 10 generators at g = 2
    assert len(sp_relations(1, 2)) == 45


def test_flipped_form_breaks_relations():
    bad = SymplecticForm.standard(1).flipped(1, 2)
    assert not check_sp_relations(1, 1, bad).passed


@pytest.mark.parametrize("n,g", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_commuting_actions(n, g):
    assert check_commuting_actions(n, g).passed


def test_spv_spanning_set():
    for n in (1, 2, 3):
        basis = spv_spanning_set(n)
        assert len(basis) == 2 * n * n + n
        assert all(X.is_member() for X in basis)
    with pytest.raises(ValueError):
        SpVGenerator([[1, 0], [0, 0]])
    zero = SpVGenerator([[0, 0], [0, 0]])
    assert apply_spv(zero, v(1, 1, (1, 1))) == Multivector.zero(1, 1)


@pytest.mark.parametrize("n,g", [(1, 1), (1, 2), (2, 1), (1, 3)])
def test_invariant_dimension(n, g):
    assert invariant_subspace(n, g).total == sp_irrep_dim(g, (n,) * g)


def test_invariants_are_killed_by_spv():
    sub = invariant_subspace(1, 2)
    for vectors in sub.basis.values():
        for a in vectors:
            for X in spv_spanning_set(1):
                assert not apply_spv(X, a)


def test_guard():
    check_guard(3, 2)
    with pytest.raises(GuardError):
        check_guard(2, 4)


def test_operator_expr_words_act_right_to_left():
    one = Multivector.one(1, 1)
    expr = OperatorExpr.of(Lam(1, 1)) * OperatorExpr.of(L(1, 1))
    assert expr.apply(one) == one


def test_torus_and_exp_examples():
    n, g = 1, 1
    a = v(n, g, (1, 1))
    assert apply_group_element(GroupElementFactored([Torus([3])]), a) == a
    b = v(n, g, (1, 1), (1, 2))
    assert apply_group_element(GroupElementFactored([Torus([3])]), b) == b * 3
    one = Multivector.one(n, g)
    t = Fraction(5, 7)
    assert apply_group_element(GroupElementFactored([Exp(L(1, 1), t)]), one) == one + b * t
    assert apply_group_element(GroupElementFactored(), b) == b


fractions = st.fractions(min_value=-3, max_value=3, max_denominator=5)
nonzero = fractions.filter(bool)


def random_element(n, g, data):
    out = Multivector.zero(n, g)
    for mask in data:
        out = out + Multivector(n, g, {mask % (1 << (2 * n * g)): 1})
    return out


@given(fractions, fractions, st.lists(st.integers(0, 255), max_size=4))
def test_exp_is_a_one_parameter_group(s, t, masks):
    a = random_element(1, 2, masks)
    for gen in (L(1, 2), Lam(2, 2)):
        left = GroupElementFactored([Exp(gen, s), Exp(gen, t)])
        right = GroupElementFactored([Exp(gen, s + t)])
        assert apply_group_element(left, a) == apply_group_element(right, a)


@given(nonzero, nonzero, fractions, st.lists(st.integers(0, 255), max_size=4))
def test_torus_conjugation(y1, y2, t, masks):
    a = random_element(1, 2, masks)
    torus = GroupElementFactored([Torus([y1, y2])])
    for i, j in ((1, 1), (1, 2), (2, 2)):
        ys = {1: y1, 2: y2}
        conj = torus * GroupElementFactored([Exp(L(i, j), t)]) * torus.inverse()
        direct = GroupElementFactored([Exp(L(i, j), t / (ys[i] * ys[j]))])
        assert apply_group_element(conj, a) == apply_group_element(direct, a)


@pytest.mark.parametrize("n,g", [(1, 1), (1, 2), (2, 1)])
def test_product_of_reflections_squared_is_central(n, g):
    w = GroupElementFactored()
    for i in range(1, g + 1):
        w = w * weyl_reflection(i)
    central = GroupElementFactored([Torus([-1] * g)])
    for a in Multivector.basis(n, g):
        image = apply_group_element(w * w, a)
        assert image == apply_group_element(central, a)
        (deg,) = grade_split(a)
        assert image == a * (-1) ** (n * g - sum(deg))
