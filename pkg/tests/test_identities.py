import math
from fractions import Fraction

import pytest

from narayana import sequences
from narayana.beatty import log_enclosure
from narayana.compositions import PartConstraint, enumerate_compositions
from narayana.identities import (
    binomial_diagonal_coeffs,
    binomial_diagonal_sum,
    c_A_constant,
    cross_family_coincidences,
    footnote_identity_check,
    verify_binomial_identity,
    verify_sum_identity,
    verify_weighted_identity,
    weighted_binomial_sum,
)
from narayana.representations import cumulative_S


def test_sum_identity():
    for q in range(1, 7):
        report = verify_sum_identity(q, 60)
        assert report.ok, report
    # spot values: n=5, q=2 gives G_7 - 1 = 12
    assert sequences.g_term(2, 7) - 1 == sum(sequences.g_term(2, k) for k in range(6)) == 12
    # n=0 reduces to G_q - 1 == G_0
    for q in range(1, 7):
        assert sequences.g_term(q, q) - 1 == sequences.g_term(q, 0)


def test_binomial_diagonal():
    assert binomial_diagonal_sum(2, 5) == 8
    assert binomial_diagonal_sum(3, 6) == 6
    for q in range(1, 7):
        assert binomial_diagonal_sum(q, 0) == 1
        report = verify_binomial_identity(q, 60)
        assert report.ok, report


def test_weighted_binomial():
    assert weighted_binomial_sum(3, 3) == 1
    assert cumulative_S(3, sequences.g_term(3, 5)) == 1
    for q in range(1, 7):
        assert weighted_binomial_sum(q, 0) == 0
    assert weighted_binomial_sum(2, 6) == cumulative_S(2, 13) == 20
    for q in range(1, 5):
        report = verify_weighted_identity(q, 14)
        assert report.ok, report


def test_composition_digit_sum_link():
    # total q-parts over compositions of n+q-1 into {1, q} equals S_A(a_n)
    for q in (2, 3, 4):
        constraint = PartConstraint.finite_set({1: 1, q: 1})
        for n in range(15):
            total = sum(
                c.parts.count(q) for c in enumerate_compositions(n + q - 1, constraint)
            )
            assert total == cumulative_S(q, sequences.a_term(q, n))


def test_pascal_recurrence_for_coefficients():
    # f_n(x) = f_{n-1}(x) + x f_{n-q}(x), coefficients compared formally
    for q in range(1, 6):
        for n in range(q, 31):
            f_n = binomial_diagonal_coeffs(q, n)
            f_prev = binomial_diagonal_coeffs(q, n - 1)
            f_shift = binomial_diagonal_coeffs(q, n - q)
            width = max(len(f_n), len(f_prev), len(f_shift) + 1)

            def at(coeffs, k):
                return coeffs[k] if 0 <= k < len(coeffs) else 0

            for k in range(width):
                assert at(f_n, k) == at(f_prev, k) + at(f_shift, k - 1)


def test_c_A_values():
    c1 = c_A_constant(1, 6)
    assert c1.decimal(6) == "0.721348"
    assert c1.width <= Fraction(1, 10**6)
    # independent cross-check: floating-point evaluation lands inside the interval
    c2 = c_A_constant(2, 8)
    phi = (1 + math.sqrt(5)) / 2
    approx = 1 / (phi * (2 * phi - 1) * math.log(phi))
    assert c2.lo <= Fraction(approx).limit_denominator(10**15) <= c2.hi
    assert c2.width <= Fraction(1, 10**8)


def test_c_A_trend_small():
    values = []
    for q in range(2, 13):
        c = c_A_constant(q, 7)
        lnq = log_enclosure(Fraction(q), Fraction(1, 10**9))
        values.append((c.lo * lnq.lo, c.hi * lnq.hi))
    for (lo1, hi1), (lo2, hi2) in zip(values, values[1:]):
        assert hi1 < lo2  # certified strict increase
    assert values[-1][1] < 1


def test_c_A_rejects_bad_args():
    with pytest.raises(ValueError):
        c_A_constant(0, 6)
    with pytest.raises(ValueError):
        c_A_constant(2, 0)


def test_footnote_identity():
    for q, value in ((1, 8), (2, 13), (3, 19)):
        assert sequences.g_term(q, 4 * q - 1) == value
        assert sequences.g_term(q + 1, 4 * q + 2) == value
        assert footnote_identity_check(q).ok
    for q in range(1, 11):
        assert footnote_identity_check(q).ok


def test_coincidences():
    hits2 = cross_family_coincidences(2, 10**6)
    assert (13, 7, 10) in hits2
    hits3 = cross_family_coincidences(3, 10**6)
    assert (19, 11, 14) in hits3
    # tiny-bound result equals an independent set-intersection scan
    for q in (1, 2, 3):
        bound = 50
        merged = cross_family_coincidences(q, bound)
        lhs = {}
        k = 2 * q - 1
        while sequences.g_term(q, k) <= bound:
            lhs[sequences.g_term(q, k)] = k
            k += 1
        rhs = {}
        k = 2 * q + 1
        while sequences.g_term(q + 1, k) <= bound:
            rhs[sequences.g_term(q + 1, k)] = k
            k += 1
        expected = sorted((v, lhs[v], rhs[v]) for v in lhs.keys() & rhs.keys())
        assert sorted(merged) == expected


def test_log_enclosure():
    for x, err in ((Fraction(2), Fraction(1, 10**12)), (Fraction(3, 2), Fraction(1, 10**9)),
                   (Fraction(30), Fraction(1, 10**9)), (Fraction(1), Fraction(1, 10))):
        enc = log_enclosure(x, err)
        assert enc.width <= err
        approx = Fraction(math.log(x)).limit_denominator(10**14)
        assert enc.lo - Fraction(1, 10**8) <= approx <= enc.hi + Fraction(1, 10**8)
    with pytest.raises(ValueError):
        log_enclosure(Fraction(1, 2), Fraction(1, 10))
