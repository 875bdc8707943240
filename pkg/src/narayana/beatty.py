"""Certified Beatty sequences for the dominant zero of g_q = x^q - x^(q-1) - 1.

All floors come from exact-rational enclosures that are refined until the
lower and upper bounds agree; no machine float ever reaches a result.
The composite-function error terms (Kimberling for q=2, the Narayana
analogue for q=3) are evaluated per n with coefficients taken from the
backward-extended fundamental recurrences.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from . import sequences


class RefinementBudgetError(RuntimeError):
    """Raised instead of ever returning an uncertified value."""


@dataclass(frozen=True)
class RootEnclosure:
    """Exact rationals lo < hi with g_q(lo) < 0 < g_q(hi); one root inside."""

    q: int
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


@dataclass(frozen=True)
class CertifiedInterval:
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def decimal(self, digits: int) -> str:
        """Midpoint rounded to `digits` places (width should already be below 10^-digits)."""
        scaled = self.midpoint() * 10**digits
        units = floor(scaled + Fraction(1, 2))
        text = str(units).rjust(digits + 1, "0")
        return f"{text[:-digits]}.{text[-digits:]}" if digits else text


def _g(q: int, x: Fraction) -> Fraction:
    return x**q - x ** (q - 1) - 1


_ROOTS: dict[int, tuple[Fraction, Fraction]] = {}
_ROOTS_LOCK = threading.Lock()


def dominant_root(q: int, width) -> RootEnclosure:
    """Enclosure of the dominant zero of g_q by exact bisection from [1, 2].

    Requires q >= 2 (for q=1 the root is exactly 2). Enclosures are cached
    per q and only ever narrowed.
    """
    if q < 2:
        raise ValueError("dominant_root requires q >= 2 (q=1 root is exactly 2)")
    w = Fraction(width)
    if w <= 0:
        raise ValueError("width bound must be positive")
    with _ROOTS_LOCK:
        lo, hi = _ROOTS.get(q, (Fraction(1), Fraction(2)))
    while hi - lo > w:
        mid = (lo + hi) / 2
        v = _g(q, mid)
        if v < 0:
            lo = mid
        elif v > 0:
            hi = mid
        else:  # g_q has no rational roots (only candidates +-1 fail)
            raise AssertionError("bisection midpoint hit the root exactly")
    with _ROOTS_LOCK:
        cached = _ROOTS.get(q)
        if cached is None or cached[1] - cached[0] > hi - lo:
            _ROOTS[q] = (lo, hi)
    return RootEnclosure(q, lo, hi)


def log_enclosure(x: Fraction, err: Fraction) -> CertifiedInterval:
    """[lo, hi] containing ln(x) with hi - lo <= err, for rational x >= 1.

    Argument is reduced to (1, 2] by halving, then ln is summed from the
    atanh series 2*sum(u^(2j+1)/(2j+1)) with its explicit tail bound.
    """
    x = Fraction(x)
    if x < 1:
        raise ValueError("log_enclosure requires x >= 1")
    if err <= 0:
        raise ValueError("err must be positive")
    e = 0
    m = x
    while m > 2:
        m /= 2
        e += 1
    if e:
        budget = err / (2 * (e + 1))
        ln2 = _atanh_ln(Fraction(2), budget)
        lo = e * ln2.lo
        hi = e * ln2.hi
    else:
        budget = err / 2
        lo = hi = Fraction(0)
    if m != 1:
        lnm = _atanh_ln(m, budget)
        lo += lnm.lo
        hi += lnm.hi
    return CertifiedInterval(lo, hi)


def _atanh_ln(m: Fraction, err: Fraction) -> CertifiedInterval:
    """ln(m) for m in (1, 2] via ln(m) = 2*atanh((m-1)/(m+1))."""
    u = (m - 1) / (m + 1)
    u2 = u * u
    power = u  # u^(2j+1)
    total = Fraction(0)
    j = 0
    while True:
        total += power / (2 * j + 1)
        power *= u2
        tail = 2 * power / ((2 * j + 3) * (1 - u2))
        if tail <= err:
            return CertifiedInterval(2 * total, 2 * total + tail)
        j += 1


_FLOOR_CACHE: dict[tuple[int, int, int], int] = {}
_FLOOR_LOCK = threading.Lock()
_INITIAL_WIDTH = Fraction(1, 1 << 16)
_REFINE_ROUNDS = 16  # width shrinks 2^-16 per round; certification must hit long before


def _certified_floor(q: int, n: int, power: int) -> int:
    """floor(n * alpha^power), certified: both enclosure ends agree."""
    key = (q, n, power)
    with _FLOOR_LOCK:
        if key in _FLOOR_CACHE:
            return _FLOOR_CACHE[key]
    width = _INITIAL_WIDTH
    for _ in range(_REFINE_ROUNDS):
        root = dominant_root(q, width)
        flo = floor(n * root.lo**power)
        fhi = floor(n * root.hi**power)
        if flo == fhi:  # soundness condition: both enclosure ends agree
            with _FLOOR_LOCK:
                _FLOOR_CACHE[key] = flo
            return flo
        width /= 1 << 16
    raise RefinementBudgetError(
        f"could not certify floor(n*alpha^{power}) for q={q}, n={n}; raise the budget"
    )


def beatty_a(q: int, n: int) -> int:
    """a(n) = floor(n * alpha)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _certified_floor(q, n, 1)


def beatty_b(q: int, n: int) -> int:
    """b(n) = floor(n * alpha^q)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _certified_floor(q, n, q)


@dataclass(frozen=True)
class ComplementarityReport:
    q: int
    limit: int
    ok: bool
    missing: tuple[int, ...] = ()
    duplicated: tuple[int, ...] = ()


def check_complementarity(q: int, limit: int) -> ComplementarityReport:
    """Do {a(n)} and {b(n)} tile 1..limit exactly once each?"""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    hits = [0] * (limit + 1)
    for fn in (beatty_a, beatty_b):
        n = 1
        while True:
            v = fn(q, n)
            if v > limit:
                break
            hits[v] += 1
            n += 1
    missing = tuple(v for v in range(1, limit + 1) if hits[v] == 0)
    duplicated = tuple(v for v in range(1, limit + 1) if hits[v] > 1)
    return ComplementarityReport(q, limit, not missing and not duplicated,
                                 missing[:10], duplicated[:10])


def word_counts(word: str) -> tuple[int, int]:
    """(#a, #b) of a composite-function word; validates the alphabet."""
    if not word or any(ch not in "ab" for ch in word):
        raise ValueError(f"word must be a nonempty string over {{a, b}}, got {word!r}")
    return word.count("a"), word.count("b")


def compose_word(q: int, word: str, n: int) -> int:
    """Apply the word right-to-left as Beatty functions: 'ab' means a(b(n))."""
    word_counts(word)
    if n < 1:
        raise ValueError("n must be >= 1")
    for ch in reversed(word):
        n = beatty_a(q, n) if ch == "a" else beatty_b(q, n)
    return n


def kimberling_error(word: str, n: int) -> int:
    """e_f(n) at q=3: N_{m-2} a(n) + N_m b(n) - N_{m-3} n - f(n), m = x + 3y.

    Negative Narayana indices come from the backward recurrence.
    """
    x, y = word_counts(word)
    m = x + 3 * y
    n_ = sequences.g_term
    return (
        n_(3, m - 2) * beatty_a(3, n)
        + n_(3, m) * beatty_b(3, n)
        - n_(3, m - 3) * n
        - compose_word(3, word, n)
    )


def kimberling_error_q2(word: str, n: int) -> int:
    """e_f at q=2: F_{m-2} a(n) + F_{m-1} b(n) - f(n), m = x + 2y (a constant in n)."""
    x, y = word_counts(word)
    m = x + 2 * y
    f_ = sequences.g_term
    return (
        f_(2, m - 2) * beatty_a(2, n)
        + f_(2, m - 1) * beatty_b(2, n)
        - compose_word(2, word, n)
    )
