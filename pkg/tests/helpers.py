"""Independent brute-force oracles shared by the test modules.

Everything here recomputes from first principles (exhaustive enumeration,
digit algorithms, integer square roots) and stays off the library code
paths it is used to check.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import product
from math import isqrt

from narayana import sequences


def gap_subsets_by_value(q: int, limit: int) -> dict[int, list[tuple[int, ...]]]:
    """Every index set over the a-sequence with pairwise gaps >= q and sum <= limit,
    bucketed by sum. Indices listed in decreasing order."""
    avals = sequences.a_values_upto(q, limit)
    buckets: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    chosen: list[int] = []

    def rec(max_idx: int, total: int) -> None:
        buckets[total].append(tuple(chosen))
        for i in range(max_idx, -1, -1):
            v = avals[i]
            if total + v <= limit:
                chosen.append(i)
                rec(i - q, total + v)
                chosen.pop()

    rec(len(avals) - 1, 0)
    return buckets


def tri_subsets_by_value(q: int, limit: int) -> dict[int, list[tuple[int, ...]]]:
    """Index sets over the tribonacci a-sequence with no q consecutive indices."""
    avals = sequences.tri_a_values_upto(q, limit)
    buckets: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    chosen: list[int] = []

    def rec(max_idx: int, total: int, run: int) -> None:
        buckets[total].append(tuple(chosen))
        for i in range(max_idx, -1, -1):
            consecutive = bool(chosen) and chosen[-1] - i == 1
            next_run = run + 1 if consecutive else 1
            if next_run >= q:
                continue  # would complete q consecutive chosen indices
            v = avals[i]
            if total + v <= limit:
                chosen.append(i)
                rec(i - 1, total + v, next_run)
                chosen.pop()

    rec(len(avals) - 1, 0, 0)
    return buckets


def _same_sign_packing(avals: list[int], k: int, q: int) -> int:
    total = 0
    while k >= 0:
        total += avals[k]
        k -= 2 * q
    return total


def far_difference_by_value(q: int, limit: int) -> dict[int, list[tuple[tuple[int, int], ...]]]:
    """Every signed selection obeying the far-difference gap rules whose
    value lands in [1, limit], bucketed by value."""
    ceiling = 4 * limit + 4  # leading summand can overshoot the value
    avals = sequences.a_values_upto(q, ceiling)
    top = len(avals) - 1
    buckets: dict[int, list[tuple[tuple[int, int], ...]]] = defaultdict(list)
    chosen: list[tuple[int, int]] = []

    def rec(pos_cap: int, neg_cap: int, total: int) -> None:
        if 1 <= total <= limit:
            buckets[total].append(tuple(chosen))
        hi = max(pos_cap, neg_cap)
        if hi < 0:
            return
        tail = _same_sign_packing(avals, hi, q)
        if total - tail > limit or total + tail < 1:
            return
        for i in range(hi, -1, -1):
            if i <= pos_cap:
                chosen.append((i, 1))
                rec(i - 2 * q, i - q - 1, total + avals[i])
                chosen.pop()
            if i <= neg_cap:
                chosen.append((i, -1))
                rec(i - q - 1, i - 2 * q, total - avals[i])
                chosen.pop()

    rec(top, top, 0)
    return buckets


def brute_gap_strings(q: int, k: int) -> int:
    """Count by literally generating all 2^k strings (keep k small)."""
    count = 0
    for bits in product((0, 1), repeat=k):
        ones = [i for i, b in enumerate(bits) if b]
        if all(b - a > q - 1 for a, b in zip(ones, ones[1:])):
            count += 1
    return count


def brute_no_q_ones(q: int, k: int) -> int:
    needle = (1,) * q
    count = 0
    for bits in product((0, 1), repeat=k):
        if not any(bits[i : i + q] == needle for i in range(k - q + 1)):
            count += 1
    return count


def brute_composition_count(n: int, admit) -> int:
    """Weighted composition count from a plain multiplicity function."""
    memo = {0: 1}

    def count(m: int) -> int:
        if m not in memo:
            memo[m] = sum(admit(p) * count(m - p) for p in range(1, m + 1))
        return memo[m]

    return count(n)


def golden_floor(n: int) -> int:
    """floor(n * phi) exactly: phi = (1 + sqrt(5))/2, so 2*n*phi = n + sqrt(5 n^2)."""
    return (n + isqrt(5 * n * n)) // 2


def naf_digits(n: int) -> list[int]:
    """Non-adjacent signed binary form, least significant first."""
    digits: list[int] = []
    while n:
        if n % 2:
            d = 2 - (n % 4)
            digits.append(d)
            n -= d
        else:
            digits.append(0)
        n //= 2
    return digits
