"""Tests for the cds rewrite on permutations."""

from itertools import permutations as all_words

import pytest

from cdsgame.permutations import (
    HEAD_RIGHT,
    TAIL_LEFT,
    NotApplicableError,
    ParseError,
    Permutation,
    apply_cds,
    fixed_point_code,
    identity,
    interlocks,
    is_fixed_point,
    legal_moves,
    parse_permutation,
    pointer_occurrences,
)


def test_parse_round_trip():
    perm = parse_permutation("3 6 5 2 4 8 1 7")
    assert list(perm) == [3, 6, 5, 2, 4, 8, 1, 7]
    assert perm.n == 8


def test_parse_rejects_bad_tokens():
    with pytest.raises(ParseError, match="'x'"):
        parse_permutation("1 2 x")
    with pytest.raises(ParseError, match="'9'"):
        parse_permutation("1 2 9")
    with pytest.raises(ParseError, match="'2'"):
        parse_permutation("1 2 2")
    with pytest.raises(ParseError):
        parse_permutation("   ")


def test_constructor_validates():
    with pytest.raises(ValueError):
        Permutation([])
    with pytest.raises(ValueError):
        Permutation([1, 1])
    with pytest.raises(ValueError):
        Permutation([0, 1])
    with pytest.raises(ValueError):
        Permutation([1, "2"])


def test_permutation_is_immutable_and_hashable():
    perm = Permutation([2, 1])
    with pytest.raises(AttributeError):
        perm.entries = (1, 2)
    assert perm == Permutation((2, 1))
    assert hash(perm) == hash(Permutation([2, 1]))
    assert perm.position_of(2) == 1


def test_pointer_occurrence_positions_and_sides():
    perm = Permutation([3, 1, 4, 2, 5])
    occ = pointer_occurrences(perm, 1)
    assert [(o.position, o.side) for o in occ] == [(2, HEAD_RIGHT), (4, TAIL_LEFT)]
    # Linear order holds for every pointer of every small permutation.
    for word in all_words(range(1, 6)):
        p5 = Permutation(word)
        for p in range(1, 5):
            a, b = pointer_occurrences(p5, p)
            assert a < b


def test_interlocks_examples():
    beta = Permutation([3, 6, 5, 2, 4, 8, 1, 7])
    assert interlocks(beta, 3, 6)
    gamma = Permutation([3, 1, 4, 2, 5])
    assert not interlocks(gamma, 1, 2)
    assert interlocks(gamma, 1, 3)
    with pytest.raises(ValueError):
        interlocks(gamma, 2, 2)
    with pytest.raises(ValueError):
        interlocks(gamma, 0, 3)
    with pytest.raises(ValueError):
        interlocks(gamma, 1, 5)


def test_interlocks_is_symmetric():
    for word in all_words(range(1, 6)):
        perm = Permutation(word)
        for p in range(1, 5):
            for q in range(p + 1, 5):
                assert interlocks(perm, p, q) == interlocks(perm, q, p)


def test_legal_moves_examples():
    assert legal_moves(Permutation([2, 4, 1, 3])) == {(1, 2), (1, 3), (2, 3)}
    assert legal_moves(Permutation([4, 1, 2, 3])) == set()
    assert legal_moves(identity(6)) == set()


def test_apply_cds_worked_example():
    beta = Permutation([3, 6, 5, 2, 4, 8, 1, 7])
    assert list(apply_cds(beta, 3, 6)) == [3, 4, 8, 1, 5, 2, 6, 7]
    # The unordered move can be given in either order.
    assert apply_cds(beta, 6, 3) == apply_cds(beta, 3, 6)


def test_apply_cds_small_examples():
    g = Permutation([2, 4, 1, 3])
    assert list(apply_cds(g, 1, 2)) == [4, 1, 2, 3]
    assert list(apply_cds(g, 1, 3)) == [3, 4, 1, 2]
    assert list(apply_cds(g, 2, 3)) == [2, 3, 4, 1]


def test_apply_cds_requires_interlocking():
    gamma = Permutation([3, 1, 4, 2, 5])
    with pytest.raises(NotApplicableError):
        apply_cds(gamma, 1, 2)
    with pytest.raises(NotApplicableError):
        apply_cds(identity(4), 1, 3)


def test_apply_cds_places_pointer_values_adjacent():
    # After a swap on (p, q), the entries p, p+1 sit adjacent in order, and
    # likewise q, q+1: the move closes both pointers.  Exhaustive for n <= 6.
    for n in range(2, 7):
        for word in all_words(range(1, n + 1)):
            perm = Permutation(word)
            for p, q in legal_moves(perm):
                out = apply_cds(perm, p, q)
                entries = list(out)
                assert sorted(entries) == list(range(1, n + 1))
                for k in (p, q):
                    i = entries.index(k)
                    assert entries[i + 1] == k + 1


def test_fixed_points_are_exactly_the_moveless_permutations():
    for n in range(1, 7):
        for word in all_words(range(1, n + 1)):
            perm = Permutation(word)
            assert is_fixed_point(perm) == (not legal_moves(perm))


def test_fixed_point_codes():
    assert is_fixed_point(Permutation([4, 1, 2, 3]))
    assert fixed_point_code(Permutation([4, 1, 2, 3])) == 3
    assert fixed_point_code(Permutation([2, 3, 4, 1])) == 1
    assert fixed_point_code(identity(5)) is None
    with pytest.raises(ValueError):
        fixed_point_code(Permutation([2, 1, 3]))


def test_rotation_forms_are_fixed_points():
    for n in range(2, 8):
        base = list(range(1, n + 1))
        for k in range(1, n):
            rot = Permutation(base[k:] + base[:k])
            assert is_fixed_point(rot)
            assert fixed_point_code(rot) == rot[0] - 1
