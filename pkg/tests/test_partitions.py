import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_std_rows, hook_length_count, recursive_degree, row_residues
from spechtcomb.algebra import ResidueSequence
from spechtcomb.partitions import (
    ColumnTableau,
    Partition,
    StandardTableau,
    canonical_tableaux,
    degree,
    dominates,
    enumerate_std,
    enumerate_std_with_residue,
    is_e_restricted,
    partitions,
    partitions_two_column,
    residue,
    residue_sequence,
)

P = Partition.parse


def test_parse_and_str():
    assert P("2^4,1^21") == Partition.two_column(4, 21)
    assert P("4,3,1").parts == (4, 3, 1)
    assert P("()") == Partition(()) == P("")
    assert str(P("2,2,1,1")) == "2^2,1^2"
    assert str(Partition(())) == "()"
    with pytest.raises(ValueError):
        P("1,2")
    with pytest.raises(ValueError):
        P("2,x")


def test_partitions_two_column():
    assert partitions_two_column(0) == [Partition(())]
    assert partitions_two_column(4) == [P("2,2"), P("2,1,1"), P("1,1,1,1")]
    assert P("2,2,1,1") in partitions_two_column(6)


def test_partitions_count():
    assert [sum(1 for _ in partitions(n)) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


@pytest.mark.parametrize(
    "lam, e, expected",
    [("1^5", 2, True), ("2", 2, False), ("2,2,1,1", 2, True), ("2^3", 2, False), ("2^3", 3, True), ("4,1", 3, False)],
)
def test_is_e_restricted(lam, e, expected):
    assert is_e_restricted(P(lam), e) is expected


def test_conjugate_and_nodes():
    lam = P("4,3,1")
    assert lam.conjugate() == P("3,2,2,1")
    assert lam.conjugate().conjugate() == lam
    assert lam.addable_nodes() == [(1, 5), (2, 4), (3, 2), (4, 1)]
    assert lam.removable_nodes() == [(1, 4), (2, 3), (3, 1)]


@given(st.integers(0, 12).flatmap(lambda n: st.sampled_from(list(partitions(n)))))
def test_conjugation_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().n == lam.n


def test_residue_examples():
    assert residue((1, 1), 5).value == 0
    assert residue((4, 3), 3).value == 2
    assert all(residue((2, 2), e).value == 0 for e in range(2, 8))


def test_residue_sequence_examples():
    t_row, _ = canonical_tableaux(P("4,3,1"))
    assert str(residue_sequence(t_row, 3)) == "01202011"
    s = StandardTableau.from_rows([(1, 2, 4, 7), (3, 5, 8), (6,)])
    assert str(residue_sequence(s, 3)) == "01220101"
    assert str(residue_sequence(StandardTableau((1,)), 2)) == "0"


def test_enumeration_counts():
    assert len(list(enumerate_std(P("2,2,1,1")))) == 9
    assert len(list(enumerate_std(P("1^7")))) == 1
    assert len(list(enumerate_std(P("4,3,1")))) == 70
    assert [t.cols for t in enumerate_std(Partition(()))] == [()]


@pytest.mark.parametrize("lam", ["2,2,1,1", "3,2", "4,3,1", "3,3", "2,2,2", "3,1,1,1", "4,2,1"])
def test_enumeration_matches_brute_force(lam):
    lam = P(lam)
    got = [t.rows() for t in enumerate_std(lam)]
    assert sorted(got) == brute_std_rows(lam)
    assert len(got) == hook_length_count(lam)
    words = [t.cols for t in enumerate_std(lam)]
    assert words == sorted(words)


@pytest.mark.parametrize("n", range(0, 9))
def test_enumeration_counts_by_hook_formula(n):
    for lam in partitions(n):
        assert sum(1 for _ in enumerate_std(lam)) == hook_length_count(lam)


def test_enumerate_with_residue():
    tabs = enumerate_std_with_residue(P("4,3,1"), 3, ResidueSequence.parse("01220101", 3))
    degs = sorted(degree(t, 3) for t in tabs)
    assert degs.count(2) == 2 and degs.count(-2) == 1
    assert enumerate_std_with_residue(P("1,1"), 2, "00") == []
    t_row, _ = canonical_tableaux(P("2,1"))
    assert t_row in enumerate_std_with_residue(P("2,1"), 3, residue_sequence(t_row, 3))
    with pytest.raises(ValueError):
        enumerate_std_with_residue(P("2,1"), 3, "01")


def test_degree_known_values():
    t1 = StandardTableau.from_rows([(1, 2, 3, 5), (4, 7, 8), (6,)])
    t2 = StandardTableau.from_rows([(1, 2, 3, 7), (4, 5, 6), (8,)])
    s = StandardTableau.from_rows([(1, 2, 4, 7), (3, 5, 8), (6,)])
    assert degree(t1, 3) == 2
    assert degree(t2, 3) == 2
    assert degree(s, 3) == -2
    assert degree(StandardTableau((1,)), 2) == 0
    assert degree(StandardTableau(()), 2) == 0


def test_degree_small_frozen():
    # ch_q Std((2,1,1)) at e = 2, computed once with the remove-n oracle
    expected = {((1, 2), (3,), (4,)): 1, ((1, 3), (2,), (4,)): -1, ((1, 4), (2,), (3,)): 1}
    for t in enumerate_std(P("2,1,1")):
        assert degree(t, 2) == expected[t.rows()]


@pytest.mark.parametrize("e", [2, 3, 4])
@pytest.mark.parametrize("lam", ["4,3,1", "3,2,1", "2,2,2,1", "3,3,1", "5,2"])
def test_degree_matches_remove_n_oracle(lam, e):
    for t in enumerate_std(P(lam)):
        assert degree(t, e) == recursive_degree(t.rows(), e)
        assert residue_sequence(t, e).entries == row_residues(t.rows(), e)


def test_dominance_order():
    lam = P("2,2,1")
    tabs = list(enumerate_std(lam))
    assert len(tabs) == 5
    t_row, t_col = canonical_tableaux(lam)
    for t in tabs:
        assert dominates(t, t)
        assert dominates(t_row, t)
        assert dominates(t, t_col)
    for a in tabs:
        for b in tabs:
            if a != b and dominates(a, b):
                assert not dominates(b, a)
            for c in tabs:
                if dominates(a, b) and dominates(b, c):
                    assert dominates(a, c)
    t1 = StandardTableau.from_rows([(1, 2, 3, 5), (4, 7, 8), (6,)])
    t2 = StandardTableau.from_rows([(1, 2, 3, 7), (4, 5, 6), (8,)])
    assert not dominates(t1, t2) and not dominates(t2, t1)
    with pytest.raises(ValueError):
        dominates(t1, tabs[0])


def test_canonical_tableaux():
    t_row, t_col = canonical_tableaux(P("2,1"))
    assert t_row.node(2) == (1, 2)
    assert t_col.node(2) == (2, 1)
    a, b = canonical_tableaux(P("1^5"))
    assert a == b
    _, t_col = canonical_tableaux(P("2,2"))
    assert t_col.node(3) == (1, 2)


def test_tableau_serialisation():
    t = StandardTableau.from_rows([(1, 3), (2, 4), (5,)])
    assert t.to_json() == {"shape": [2, 2, 1], "entries": [1, 3, 2, 4, 5], "column_word": "11221"}
    assert str(t) == "1,3/2,4/5"
    assert t.restrict(3).shape == P("2,1")


def test_invalid_tableaux_rejected():
    with pytest.raises(ValueError):
        StandardTableau((2, 1))
    with pytest.raises(ValueError):
        StandardTableau.from_rows([(1, 2), (4,), (3,)])
    assert not ColumnTableau((1, 2, 2)).is_standard()


@settings(max_examples=60)
@given(st.integers(0, 9).flatmap(lambda n: st.sampled_from(list(partitions(n)))), st.integers(2, 5))
def test_degree_matches_oracle_general_shapes(lam, e):
    for t in list(enumerate_std(lam))[:40]:
        assert degree(t, e) == recursive_degree(t.rows(), e)
