from collections import Counter

import pytest

from qsymflow.coeff import ZERO, q
from qsymflow.combinat import (
    BLOCK_VALUES,
    REVERSE_RUNS,
    TwoWayShuffle,
    admissible_sets,
    bre,
    coarsenings,
    comp_of,
    complement,
    compositions,
    concat_or_near,
    des,
    descent_representative,
    interval_stats,
    near_factorizations,
    overlapping_shuffles,
    phi,
    preshuffle,
    psi,
    refinements,
    sdes,
    sdes_and_sw,
    set_of,
    shift_word,
    shuffles,
    stat_g,
    stat_g_bre,
    stat_s,
    stat_s_bre,
    subsets,
    subsets_between,
    sw_exponents,
    two_way_shuffles,
    weights,
)
from qsymflow.exceptions import CompositionError, DegenerateIntervalError


def test_set_comp_bijection():
    assert set_of((1, 3, 2)) == frozenset({1, 4})
    assert comp_of({1, 4}, 6) == (1, 3, 2)
    assert comp_of((), 0) == ()
    for n in range(6):
        assert len(compositions(n)) == (2 ** (n - 1) if n else 1)
        assert all(comp_of(set_of(a), n) == a for a in compositions(n))


def test_invalid_inputs():
    with pytest.raises(CompositionError):
        set_of((2, 0, 1))
    with pytest.raises(CompositionError):
        comp_of({3}, 3)


def test_refinement_order():
    assert sorted(coarsenings((1, 1, 1))) == sorted([(1, 1, 1), (2, 1), (1, 2), (3,)])
    assert sorted(refinements((1, 2))) == [(1, 1, 1), (1, 2)]


def test_subsets_are_sorted_by_size_then_lex():
    assert subsets(3) == [
        frozenset(), frozenset({1}), frozenset({2}), frozenset({3}),
        frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3}), frozenset({1, 2, 3}),
    ]
    assert len(subsets_between(frozenset({1}), frozenset({1, 2, 3}))) == 4


def test_weight_table_rows():
    assert weights(frozenset(), 4) == (1, 1, 1)
    assert weights(frozenset({1}), 4) == (1, 2, 2)
    assert weights(frozenset({2}), 4) == (1, 1, 2)
    assert weights(frozenset({1, 3}), 4) == (1, 2, 2)
    assert weights(frozenset({1, 2, 3}), 4) == (1, 2, 3)


def test_statistics_agree_with_block_positions():
    n = 5
    for J in subsets(n - 1):
        for I in subsets_between(frozenset(), J):
            assert stat_s(I, J) == stat_s_bre(I, J, n)
            assert stat_g(I, J) == stat_g_bre(I, J, n)
    assert bre(frozenset(), frozenset({1, 2}), 3) == (3,)


def test_descents():
    assert des((1, 2, 4, 3)) == frozenset({3})
    assert des((7, 6, 1, 4, 5, 3, 2)) == frozenset({1, 2, 5, 6})
    assert sdes((0, 3, 0, 1, 2)) == frozenset({1})


def test_standardized_weights():
    assert sw_exponents((1, 2, 4, 3), 2) == (1, None, 1)
    assert sw_exponents((7, 6, 1, 4, 5, 3, 2), 3) == (1, None, None, 3, None, 1)


@pytest.mark.parametrize("rule", [REVERSE_RUNS, BLOCK_VALUES])
def test_descent_representatives(rule):
    for m in range(1, 6):
        for I in subsets(m - 1):
            w = descent_representative(I, m, rule)
            assert sorted(w) == list(range(1, m + 1))
            assert des(w) == I


def test_interval_statistics():
    stats = interval_stats(frozenset({1, 2, 3}), 5)
    assert stats.e == frozenset({3}) and stats.e_c == frozenset() and stats.e_bar == frozenset({3})
    stats = interval_stats(frozenset({3, 4, 5}), 5)
    assert stats.e == frozenset() and stats.e_c == frozenset({2})
    with pytest.raises(DegenerateIntervalError):
        interval_stats(frozenset(), 3).z


def test_preshuffle():
    sharp, _ = preshuffle(frozenset({1}), frozenset({2}), frozenset({1, 2, 3}), 2, 3)
    assert sharp == frozenset({2, 4})


def test_near_factorizations():
    assert near_factorizations((1, 3, 2)) == [
        ((), (1, 3, 2)),
        ((1, 1), (2, 2)),
        ((1, 2), (1, 2)),
        ((1, 3, 1), (1,)),
        ((1, 3, 2), ()),
    ]
    flags = {(a, b): c for a, b, c in concat_or_near((1, 2))}
    assert flags[((1,), (2,))] is True
    assert flags[((1, 1), (1,))] is False


def test_shuffle_counts():
    assert len(two_way_shuffles((1,), (1,))) == 4
    assert Counter(overlapping_shuffles((1,), (1,))) == Counter({(1, 1): 2, (2,): 1})
    assert len(two_way_shuffles((2, 1), (2,))) == 8


def test_psi_phi_inverse():
    for alpha, beta in [((1,), (1,)), ((2, 1), (1, 2)), ((1, 1, 1), (2,))]:
        for A in admissible_sets(alpha, beta):
            assert phi(psi(A, alpha, beta), alpha, beta) == A


def test_complement():
    assert complement((1, 3, 2)) == (2, 1, 2, 1)
    assert complement((4,)) == (1, 1, 1, 1)
    assert all(complement(complement(a)) == a for a in compositions(6))


def test_interval_statistics_of_a_spread_out_set():
    stats = interval_stats(frozenset({1, 3, 4, 6, 8}), 10)
    assert stats.e == frozenset({1, 4, 6, 8})
    assert stats.e_c == frozenset({2, 5, 7})
    assert stats.e_bar == frozenset({1, 2, 4, 5, 6, 7, 8})
    assert stats.z == 8


def test_preshuffle_of_descent_sets():
    sharp, shuffled = preshuffle(frozenset({2, 3}), frozenset({2}), frozenset({1, 3, 4}), 4, 3)
    assert sharp == frozenset({3, 5, 6})
    assert shuffled == frozenset({1, 3, 4, 5, 6})


def test_shuffle_set_of_words():
    assert set(shuffles((1, 2), shift_word((2, 1), 2))) == {
        (1, 2, 4, 3),
        (1, 4, 2, 3),
        (1, 4, 3, 2),
        (4, 1, 2, 3),
        (4, 1, 3, 2),
        (4, 3, 1, 2),
    }


def test_overlapping_and_two_way_shuffles_of_21_and_2():
    assert Counter(overlapping_shuffles((2, 1), (2,))) == Counter(
        {(2, 1, 2): 1, (2, 2, 1): 2, (4, 1): 1, (2, 3): 1}
    )
    two_way = two_way_shuffles((2, 1), (2,))
    assert all(isinstance(g, TwoWayShuffle) for g in two_way)
    assert Counter(g.plus() for g in two_way) == Counter(
        {(2, 1, 2): 1, (2, 3): 2, (2, 2, 1): 2, (4, 1): 2, (5,): 1}
    )


def test_standardized_descents_and_weights_of_a_long_word():
    low, high, sw = sdes_and_sw((7, 6, 1, 4, 5, 3, 2), 3)
    assert low == frozenset({1, 2})
    assert high == frozenset({1, 2})
    assert sw == (q, ZERO, ZERO, q ** 3, ZERO, q)


def test_psi_and_admissible_sets():
    alpha, beta = (3, 2), (2, 1)
    assert psi(frozenset({1, 2, 3}), alpha, beta) == frozenset({1, 2})
    assert psi(frozenset({1, 2, 6}), alpha, beta) == frozenset({1, 3})
    assert psi(frozenset({6, 7, 8}), alpha, beta) == frozenset({3, 4})
    assert set(admissible_sets((2, 1), (2,))) == {frozenset({1, 2}), frozenset({3, 4}), frozenset({4, 5})}
