from fractions import Fraction

import pytest

from narayana import beatty
from narayana.beatty import (
    RefinementBudgetError,
    beatty_a,
    beatty_b,
    check_complementarity,
    compose_word,
    dominant_root,
    kimberling_error,
    kimberling_error_q2,
    word_counts,
)

import helpers

WORDS_3 = [
    "".join(w)
    for length in (1, 2, 3)
    for w in __import__("itertools").product("ab", repeat=length)
]


def test_dominant_root_brackets():
    for q in range(2, 8):
        root = dominant_root(q, Fraction(1, 10**6))
        assert root.lo**q - root.lo ** (q - 1) - 1 < 0
        assert root.hi**q - root.hi ** (q - 1) - 1 > 0
        assert root.width <= Fraction(1, 10**6)
        assert 1 < root.lo < root.hi < 2


def test_dominant_root_known_digits():
    golden = dominant_root(2, Fraction(1, 10**13))
    assert golden.lo < Fraction(1618033988749894, 10**15) < golden.hi
    narayana3 = dominant_root(3, Fraction(1, 10**13))
    assert narayana3.lo < Fraction(1465571231876768, 10**15) < narayana3.hi


def test_dominant_root_rejects():
    with pytest.raises(ValueError):
        dominant_root(1, Fraction(1, 100))
    with pytest.raises(ValueError):
        dominant_root(3, 0)


def test_beatty_a_against_isqrt_oracle():
    assert [beatty_a(2, n) for n in range(1, 6)] == [1, 3, 4, 6, 8]
    for n in range(1, 3000):
        assert beatty_a(2, n) == helpers.golden_floor(n)


def test_beatty_b_q2_shift():
    # alpha^2 = alpha + 1 exactly at q=2
    for n in range(1, 500):
        assert beatty_b(2, n) == beatty_a(2, n) + n


def test_beatty_q3_values():
    assert beatty_a(3, 1) == 1
    assert beatty_b(3, 1) == 3
    assert compose_word(3, "b", 2) == 6


def test_beatty_rejects_bad_n():
    with pytest.raises(ValueError):
        beatty_a(2, 0)


def test_complementarity():
    for q in range(2, 6):
        report = check_complementarity(q, 2000)
        assert report.ok, report
    assert check_complementarity(2, 1).ok


def test_compose_word():
    assert compose_word(2, "aa", 3) == 6
    for q in (2, 3):
        for n in (1, 7, 30):
            assert compose_word(q, "a", n) == beatty_a(q, n)
    with pytest.raises(ValueError):
        compose_word(2, "ax", 3)
    with pytest.raises(ValueError):
        compose_word(2, "", 3)


def test_word_counts():
    assert word_counts("aab") == (2, 1)
    with pytest.raises(ValueError):
        word_counts("abc")


def test_kimberling_q2_constancy():
    assert all(kimberling_error_q2("aa", n) == 1 for n in range(1, 800))
    assert all(kimberling_error_q2("a", n) == 0 for n in range(1, 100))
    for word in WORDS_3:
        values = {kimberling_error_q2(word, n) for n in range(1, 800)}
        assert len(values) == 1, (word, values)
        assert values.pop() >= 0


def test_kimberling_q3_nonnegative_bounded():
    assert all(kimberling_error("a", n) == 0 for n in range(1, 200))
    for word in WORDS_3:
        values = [kimberling_error(word, n) for n in range(1, 800)]
        assert all(v >= 0 for v in values), word
        # running maximum stabilizes well before the end of the range
        assert max(values[:400]) == max(values), word


def test_refinement_budget_error(monkeypatch):
    monkeypatch.setattr(beatty, "_REFINE_ROUNDS", 0)
    beatty._FLOOR_CACHE.clear()
    with pytest.raises(RefinementBudgetError):
        beatty_a(2, 10**6 + 7)
    monkeypatch.undo()
    beatty._FLOOR_CACHE.clear()
    assert beatty_a(2, 10**6 + 7) == helpers.golden_floor(10**6 + 7)
