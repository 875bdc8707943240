import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from narayana import sequences
from narayana.compositions import Composition
from narayana.representations import (
    FarDifferenceRep,
    QRepresentation,
    cumulative_S,
    far_difference_rep,
    format_far_difference,
    format_rep,
    greedy_q_rep,
    rep_to_composition,
    rep_value,
    sum_of_digits,
    tribonacci_greedy_rep,
    validate_far_difference,
    validate_q_rep,
    validate_tri_rep,
)

import helpers


def test_greedy_known_values():
    # 41+6+2 = 49, and 47 splits as 41+6; both pinned by the uniqueness oracle
    assert greedy_q_rep(3, 49).indices == (9, 4, 1)
    assert greedy_q_rep(3, 49).summands() == [41, 6, 2]
    assert greedy_q_rep(3, 47).indices == (9, 4)
    assert greedy_q_rep(3, 47).g_indices() == [13, 8]
    assert greedy_q_rep(2, 100).summands() == [89, 8, 3]
    assert greedy_q_rep(2, 0).indices == ()


def test_greedy_largest_summand_is_max_below_n():
    for q in (1, 2, 3, 4):
        for n in (1, 5, 17, 100, 999):
            top = greedy_q_rep(q, n).summands()[0]
            assert top <= n
            k = sequences.largest_a_index(q, n)
            assert top == sequences.a_term(q, k)


def test_validate_q_rep():
    assert validate_q_rep(QRepresentation(3, (9, 4, 1))).ok
    bad = validate_q_rep(QRepresentation(3, (5, 3)))
    assert not bad.ok and "gap 2" in bad.detail
    assert validate_q_rep(QRepresentation(3, ())).ok
    assert not validate_q_rep(QRepresentation(2, (3, 3))).ok


def test_rep_value():
    assert rep_value(QRepresentation(3, (9, 4, 1))) == 49
    assert rep_value(QRepresentation(3, ())) == 0
    for q in (1, 2, 5):
        assert rep_value(QRepresentation(q, (0,))) == 1


def test_uniqueness_against_exhaustive_subsets():
    limit = 300
    for q in range(1, 6):
        buckets = helpers.gap_subsets_by_value(q, limit)
        for n in range(limit + 1):
            assert len(buckets[n]) == 1, f"q={q}, n={n}: {buckets[n]}"
            assert buckets[n][0] == greedy_q_rep(q, n).indices


@settings(max_examples=150, deadline=None)
@given(q=st.integers(1, 5), n=st.integers(0, 10**12))
def test_greedy_round_trip(q, n):
    rep = greedy_q_rep(q, n)
    assert validate_q_rep(rep).ok
    assert rep_value(rep) == n


def _count_gap_subsets_with_sum(q, n):
    """Targeted oracle: number of gap-valid index sets summing exactly to n."""
    avals = sequences.a_values_upto(q, max(n, 1))
    packing = []
    for i in range(len(avals)):
        packing.append(avals[i] + (packing[i - q] if i >= q else 0))

    def rec(max_idx, remaining):
        if remaining == 0:
            return 1
        total = 0
        for i in range(min(max_idx, len(avals) - 1), -1, -1):
            if avals[i] > remaining:
                continue
            if packing[i] < remaining:
                break  # even the densest packing falls short
            total += rec(i - q, remaining - avals[i])
        return total

    return rec(len(avals) - 1, n)


def test_uniqueness_sampled_above_2000():
    for q in range(1, 6):
        for n in (2501, 4999, 7777, 10000):
            assert _count_gap_subsets_with_sum(q, n) == 1
            assert rep_value(greedy_q_rep(q, n)) == n


def test_far_difference_examples():
    for q in (1, 2, 3):
        for k in (0, 3, 6):
            rep = far_difference_rep(q, sequences.a_term(q, k))
            assert rep.terms == ((k, 1),)
    assert far_difference_rep(1, 7).summands() == [(8, 3), (-1, 0)]
    assert far_difference_rep(2, 12).summands() == [(13, 5), (-1, 0)]


def test_far_difference_uniqueness_small():
    limit = 400
    for q in (1, 2, 3):
        buckets = helpers.far_difference_by_value(q, limit)
        for n in range(1, limit + 1):
            assert len(buckets[n]) == 1, f"q={q}, n={n}: {buckets[n]}"
            assert buckets[n][0] == far_difference_rep(q, n).terms


def test_far_difference_q1_is_naf():
    # at q=1 both gap rules (2q same-sign, q+1 opposite) degenerate to >= 2,
    # which is exactly the non-adjacent signed binary form
    for n in range(1, 2000):
        rep = far_difference_rep(1, n)
        digits = helpers.naf_digits(n)
        expected = tuple(
            (i, d) for i, d in sorted(enumerate(digits), reverse=True) if d
        )
        assert rep.terms == expected
        gaps = [i - j for (i, _), (j, _) in zip(rep.terms, rep.terms[1:])]
        assert all(g >= 2 for g in gaps)


def test_validate_far_difference():
    assert validate_far_difference(FarDifferenceRep(2, ((5, 1), (0, -1)))).ok
    assert not validate_far_difference(FarDifferenceRep(2, ((5, 1), (2, 1)))).ok
    assert not validate_far_difference(FarDifferenceRep(2, ((5, 1), (3, -1)))).ok
    assert validate_far_difference(FarDifferenceRep(2, ())).ok


def test_sum_of_digits():
    assert sum_of_digits(3, 49) == 3
    assert sum_of_digits(3, 47) == 2
    assert sum_of_digits(2, 100) == 3
    for q in (1, 2, 3):
        assert sum_of_digits(q, 0) == 0


def test_cumulative_S():
    assert cumulative_S(3, 2) == 1  # s(0) + s(1)
    for q in (1, 2, 3):
        assert cumulative_S(q, 0) == 0
    assert cumulative_S(2, 13) == 20
    # direct summation agrees with per-j greedy even on the q=1 popcount path
    for n in (0, 1, 17, 300):
        assert cumulative_S(1, n) == sum(len(greedy_q_rep(1, j).indices) for j in range(n))


def test_rep_to_composition_small_table():
    rows = [rep_to_composition(3, ell, 4).parts for ell in range(6)]
    assert rows == [
        (1, 1, 1, 1, 1, 1),
        (3, 1, 1, 1),
        (1, 3, 1, 1),
        (1, 1, 3, 1),
        (1, 1, 1, 3),
        (3, 3),
    ]


def test_rep_to_composition_range_checks():
    with pytest.raises(ValueError):
        rep_to_composition(3, sequences.a_term(3, 4), 4)
    with pytest.raises(ValueError):
        rep_to_composition(3, -1, 4)


def test_rep_to_composition_bijective_and_counts_q_parts():
    for q in (2, 3, 4):
        for k in range(15):
            images = set()
            for ell in range(sequences.a_term(q, k)):
                comp = rep_to_composition(q, ell, k)
                assert comp.n == k + q - 1
                assert set(comp.parts) <= {1, q}
                assert comp.parts.count(q) == sum_of_digits(q, ell)
                images.add(comp.parts)
            assert len(images) == sequences.a_term(q, k)


def test_rep_to_composition_q1_uses_colors():
    for k in range(1, 9):
        images = set()
        for ell in range(sequences.a_term(1, k)):
            comp = rep_to_composition(1, ell, k)
            assert comp.parts == (1,) * k
            assert comp.colors is not None
            assert comp.colors.count(2) == sum_of_digits(1, ell)
            images.add(comp.colors)
        assert len(images) == 1 << k


def test_tribonacci_greedy():
    assert tribonacci_greedy_rep(2, 4).summands() == [3, 1]
    assert tribonacci_greedy_rep(3, 5).summands() == [4, 1]
    assert tribonacci_greedy_rep(3, 0).indices == ()
    with pytest.raises(ValueError):
        tribonacci_greedy_rep(1, 5)


def test_tribonacci_uniqueness():
    limit = 2000
    for q in (2, 3, 4):
        buckets = helpers.tri_subsets_by_value(q, limit)
        for n in range(limit + 1):
            assert len(buckets[n]) == 1, f"q={q}, n={n}: {buckets[n]}"
            assert buckets[n][0] == tribonacci_greedy_rep(q, n).indices
            assert validate_tri_rep(tribonacci_greedy_rep(q, n)).ok


def test_validate_tri_rep():
    assert validate_tri_rep(tribonacci_greedy_rep(3, 100)).ok
    from narayana.representations import TriQRepresentation

    assert not validate_tri_rep(TriQRepresentation(3, (4, 3, 2))).ok
    assert validate_tri_rep(TriQRepresentation(3, (4, 3))).ok
    assert not validate_tri_rep(TriQRepresentation(2, (4, 3))).ok


def test_formatting():
    assert format_rep(greedy_q_rep(3, 49)) == "49 = 41 + 6 + 2"
    assert format_rep(greedy_q_rep(3, 0)) == "0 (empty)"
    assert format_far_difference(far_difference_rep(2, 12)) == "12 = 13 - 1"
