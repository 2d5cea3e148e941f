import pytest

from spechtcomb.algebra import Character, ONE, ResidueSequence, q
from spechtcomb.characters import (
    ch_q_set,
    ch_q_simple,
    ch_q_specht,
    char_decomposition,
    simple_characters,
    verify_char_sum,
)
from spechtcomb.partitions import Partition, StandardTableau, degree, enumerate_std, partitions_two_column, residue_sequence

P = Partition.parse
GRID = [(2, 0), (3, 0), (2, 2), (3, 3), (3, 2), (2, 3), (4, 3), (5, 2)]


def test_singleton_and_empty():
    assert ch_q_set([StandardTableau((1,))], 2) == Character(2, {ResidueSequence((0,), 2): ONE})
    assert len(ch_q_set([], 3)) == 0


def test_specht_character_small_frozen():
    ch = ch_q_specht(P("2,1,1"), 2)
    assert ch == Character(
        2,
        {ResidueSequence((0, 1, 1, 0), 2): q + q**-1, ResidueSequence((0, 1, 0, 1), 2): q},
    )


def test_specht_below_first_wall():
    ch = ch_q_specht(P("1^3"), 5)
    assert ch == Character(5, {ResidueSequence((0, 4, 3), 5): ONE})
    assert ch_q_simple(P("1^3"), 5, 0) == ch


def test_specht_mass():
    assert ch_q_specht(P("2,2,1,1"), 2).dimension() == 9


def test_census_coefficient():
    ch = ch_q_specht(P("4,3,1"), 3)
    coeff = ch[ResidueSequence.parse("01220101", 3)]
    assert coeff == 2 * q**2 + 3 + q**-2


def test_simple_character_example():
    ch = ch_q_simple(P("2,2,1,1"), 2, 2)
    assert ch.dimension() == 4
    assert ch.is_bar_invariant()


def test_simple_character_errors():
    with pytest.raises(ValueError):
        ch_q_simple(P("2^3"), 2, 0)
    with pytest.raises(ValueError):
        ch_q_simple(P("3,1"), 3, 0)


def test_decomposition_of_2211():
    parts = char_decomposition(P("2,2,1,1"), 2, 2)
    assert {mu: factor for mu, (factor, _) in parts.items()} == {P("2,2,1,1"): ONE, P("2,1^4"): q, P("1^6"): ONE}
    assert verify_char_sum(P("2,2,1,1"), 2, 2)


@pytest.mark.parametrize("e, p", GRID)
def test_character_identities(e, p):
    for n in range(0, 11):
        simples = simple_characters(n, e, p)
        for ch in simples.values():
            assert ch.is_bar_invariant()
        for lam in partitions_two_column(n):
            assert verify_char_sum(lam, e, p)
            total = Character(e)
            for mu, (factor, piece) in char_decomposition(lam, e, p).items():
                assert piece == simples[mu].scale(factor)
                total = total + piece
            assert total == ch_q_specht(lam, e)


@pytest.mark.parametrize("e", [2, 3, 4])
def test_degree_sums_non_negative(e):
    for n in range(0, 11):
        for lam in partitions_two_column(n):
            sums = {}
            for t in enumerate_std(lam):
                key = residue_sequence(t, e).entries
                sums[key] = sums.get(key, 0) + degree(t, e)
            assert min(sums.values()) >= 0
