"""Tests for overlap graphs and the sorting/pivot commutation."""

from itertools import permutations as all_words

import random

from cdsgame.graphs import Graph
from cdsgame.overlap import check_commutation, overlap_graph
from cdsgame.permutations import Permutation, apply_cds, identity, legal_moves


def test_overlap_graph_fixture():
    g = overlap_graph(Permutation([3, 1, 4, 2, 5]))
    assert g == Graph([1, 2, 3, 4], [(1, 3), (1, 4), (2, 4)])


def test_overlap_vertices_are_all_pointer_codes():
    for n in range(2, 7):
        word = list(range(1, n + 1))
        random.Random(n).shuffle(word)
        g = overlap_graph(Permutation(word))
        assert g.vertices == frozenset(range(1, n))


def test_overlap_edges_are_the_legal_moves():
    for word in all_words(range(1, 6)):
        perm = Permutation(word)
        g = overlap_graph(perm)
        assert {tuple(sorted(e)) for e in g.edges} == legal_moves(perm)


def test_fixed_points_have_edgeless_overlap_graphs():
    assert overlap_graph(identity(5)).n_edges() == 0
    # ...but edgeless does not mean sorted: [3,4,1,2] has no interlocking
    # pointers and no moves, yet is not the identity.
    assert overlap_graph(Permutation([3, 4, 1, 2])).n_edges() == 0
    assert legal_moves(Permutation([3, 4, 1, 2])) == set()
    assert overlap_graph(Permutation([3, 1, 4, 2, 5])).n_edges() == 3


def test_commutation_on_the_worked_example():
    beta = Permutation([3, 6, 5, 2, 4, 8, 1, 7])
    assert check_commutation(beta, 3, 6)


def test_commutation_exhaustive_small():
    for n in range(2, 6):
        for word in all_words(range(1, n + 1)):
            perm = Permutation(word)
            for p, q in legal_moves(perm):
                assert check_commutation(perm, p, q)


def test_commutation_sampled_larger():
    rng = random.Random(99)
    for _ in range(300):
        n = rng.choice((7, 8, 9))
        word = list(range(1, n + 1))
        rng.shuffle(word)
        perm = Permutation(word)
        moves = sorted(legal_moves(perm))
        if not moves:
            continue
        p, q = moves[rng.randrange(len(moves))]
        assert check_commutation(perm, p, q)
        # Spelled out: the overlap graph of the swapped permutation is the
        # pivoted overlap graph.
        from cdsgame.graphs import apply_gcds

        assert overlap_graph(apply_cds(perm, p, q)) == apply_gcds(
            overlap_graph(perm), (p, q)
        )
