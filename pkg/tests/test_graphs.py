from fractions import Fraction

import pytest

from skewsp.graphs import (GraphGuardError, GraphVector, MarkedGraph, block_ranks, canonicalize,
                           check_graph_relations, check_well_defined, chord_graph,
                           disjoint_union, empty_graph, generate_relations, get_block,
                           graph_action, highest_weight_check, ihx_terms, parity_admissible,
                           profiles, quotient_rank, reduce_in_quotient, theta_graph,
                           tripod_graph)
from skewsp.reps import sp_irrep_dim
from skewsp.spops import H, L, Lam, all_generators, sp_relations


def vec(graph, g=2, n=1, c=1):
    return GraphVector.of(g, n, graph, c)


def bubble(i, j):
    """Two trivalent vertices joined by a double edge, one leg on each."""
    return MarkedGraph([(0, 1, 2), (3, 4, 5)],
                       {0: 3, 3: 0, 1: 4, 4: 1, 2: 6, 6: 2, 5: 7, 7: 5}, {6: i, 7: j})


def test_canonical_examples():
    code, sign = canonicalize(empty_graph())
    assert sign == 1 and code == (0, (), ())
    flipped = MarkedGraph([(0, 2, 1), (3, 4, 5)], {0: 3, 3: 0, 1: 4, 4: 1, 2: 5, 5: 2}, {})
    assert canonicalize(flipped) == (canonicalize(theta_graph())[0], -1)
    assert canonicalize(chord_graph((1, 2))) == canonicalize(chord_graph((2, 1)))


def test_relabelling_half_edges_is_invisible():
    a = tripod_graph(1, 2, 3)
    b = MarkedGraph([(10, 11, 12)], {10: 3, 3: 10, 11: 7, 7: 11, 12: 5, 5: 12}, {3: 1, 7: 2, 5: 3})
    assert canonicalize(a) == canonicalize(b)
    rotated = MarkedGraph([(1, 2, 0)], {0: 3, 3: 0, 1: 4, 4: 1, 2: 5, 5: 2}, {3: 1, 4: 2, 5: 3})
    assert canonicalize(rotated) == canonicalize(a)


def test_zero_by_antisymmetry():
    tadpole = MarkedGraph([(0, 1, 2)], {0: 1, 1: 0, 2: 3, 3: 2}, {3: 1})
    assert canonicalize(tadpole)[1] == 0
    assert canonicalize(tripod_graph(1, 1, 2))[1] == 0
    assert canonicalize(tripod_graph(1, 2, 3))[1] != 0


def test_malformed_graph_rejected():
    with pytest.raises(ValueError):
        MarkedGraph([(0, 1, 2)], {0: 1, 1: 0}, {})
    with pytest.raises(ValueError):
        MarkedGraph([(0, 1)], {0: 1, 1: 0}, {})


def test_json_round_trip():
    g = disjoint_union(theta_graph(), chord_graph((1, 2)))
    assert canonicalize(MarkedGraph.from_json(g.to_json())) == canonicalize(g)


def test_as_relation_on_theta_is_vacuous():
    rels = generate_relations("AS", 1, 1, 2, (0,))
    assert rels and all(not r for r in rels)


def test_circle_relation():
    ((circle, factor, plain),) = generate_relations("O", 1, 1, 0, (0,))
    assert circle.circles == 1 and factor == -2
    assert GraphVector.of(1, 1, circle) == GraphVector.of(1, 1, plain) * -2


def test_p2_kills_two_parallel_chords():
    rels = generate_relations("P", 1, 1, 0, (4,))
    two = GraphVector.of(1, 1, chord_graph((1, 1), (1, 1)))
    assert two * 3 in rels


def test_ihx_has_three_terms():
    terms = ihx_terms(theta_graph(), 0)
    assert len(terms) == 3
    assert sum((vec(t) for t in terms), GraphVector(2, 1)) == GraphVector(2, 1)


def test_theta_survives_and_bubble_reduces():
    assert not reduce_in_quotient(vec(theta_graph()))
    theta_chord = disjoint_union(theta_graph(), chord_graph((1, 2)))
    assert reduce_in_quotient(vec(bubble(1, 2)) + vec(theta_chord, c=Fraction(1, 2)))


def test_known_ranks():
    assert quotient_rank(1, 1, 0) == 2
    assert quotient_rank(2, 1, 0) == 5
    assert quotient_rank(1, 1, 0) == sp_irrep_dim(1, (1,))
    assert quotient_rank(2, 1, 0) == sp_irrep_dim(2, (1, 1))


@pytest.mark.parametrize("g", [1, 2, 3])
def test_internal_degree_two_matches_degree_zero(g):
    assert block_ranks(g, 1, 2) == block_ranks(g, 1, 0)


def test_g3_ranks():
    assert quotient_rank(3, 1, 0) == sp_irrep_dim(3, (1, 1, 1)) == 14
    assert quotient_rank(3, 1, 1) == 1
    assert quotient_rank(2, 1, 3) == 0


@pytest.mark.parametrize("g", [1, 2, 3])
def test_no_marking_used_more_than_2n_times(g):
    for m in (0, 1, 2):
        for p, r in block_ranks(g, 1, m).items():
            if max(p) > 2:
                assert r == 0


def test_guards():
    with pytest.raises(GraphGuardError):
        get_block(5, 1, 0, (0,) * 5)
    with pytest.raises(GraphGuardError):
        generate_relations("P", 1, 1, 0, (10,))


def test_action_examples():
    e = vec(empty_graph())
    assert graph_action(L(1, 1), e) == vec(chord_graph((1, 1)))
    assert graph_action(Lam(1, 2), e) == GraphVector(2, 1)
    assert graph_action(H(1, 2), vec(chord_graph((1, 1)))) == vec(chord_graph((1, 2)), c=2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hand_commutators(n):
    e = GraphVector.of(1, n, empty_graph())
    up = graph_action(L(1, 1), e)
    assert graph_action(Lam(1, 1), up) == e * n
    chord = GraphVector.of(1, n, chord_graph((1, 1)))
    comm = graph_action(Lam(1, 1), graph_action(L(1, 1), chord)) - \
        graph_action(L(1, 1), graph_action(Lam(1, 1), chord))
    assert comm == chord * (n - 2)
    e2 = GraphVector.of(2, n, empty_graph())
    assert graph_action(Lam(1, 2), graph_action(L(1, 2), e2)) == e2 * Fraction(n, 2)


@pytest.mark.parametrize("g", [1, 2])
def test_bracket_relations_on_graphs(g):
    assert check_graph_relations(g, 1, sp_relations(1, g)) == []


def test_bracket_relations_on_graphs_g3():
    assert check_graph_relations(3, 1, sp_relations(1, 3), stop_at_first=True) == []


def test_wrong_diagonal_factor_is_detected():
    bad = check_graph_relations(1, 1, sp_relations(1, 1), lambda_diagonal=Fraction(-1, 4),
                                stop_at_first=True)
    assert bad


def test_relations_map_to_relations():
    assert check_well_defined(1, 1, all_generators(1), 2) == []
    assert check_well_defined(2, 1, all_generators(2), 4) == []


def test_parity_admissible():
    assert parity_admissible(0, 2)
    assert not parity_admissible(1, 1)
    assert not parity_admissible(2, 1)
    for q in range(3):
        for legs in range(7):
            if (3 * q + legs) % 2:
                continue
            exists = any(get_block(3, 1, q, p).dimension
                         for p in profiles(3, legs)
                         if sum(p) == legs)
            assert exists == parity_admissible(q, legs)


def test_highest_weights():
    r = highest_weight_check(2, 1, 0)
    assert r["passed"] and r["weights"] == [1, 1] and r["lowering_power_vanishes"]
    r = highest_weight_check(3, 1, 1)
    assert r["passed"] and r["weights"] == [0, 0, 0]
    with pytest.raises(GraphGuardError):
        highest_weight_check(2, 1, 1)
