"""q-representations: greedy sums of a-terms, signed far-difference form,
digit-sum functions, and the bit-string-to-composition map.

Indices throughout are A-indices (summand a_i = G_{2q-2+i}); helpers
convert to raw G-indices for display.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import NamedTuple

from . import sequences
from .compositions import Composition


@dataclass(frozen=True)
class QRepresentation:
    """Sum of distinct a_i with consecutive chosen indices >= q apart."""

    q: int
    indices: tuple[int, ...]  # strictly decreasing

    def summands(self) -> list[int]:
        return [sequences.a_term(self.q, i) for i in self.indices]

    def value(self) -> int:
        return sum(self.summands())

    def least_summand(self) -> int:
        if not self.indices:
            raise ValueError("empty representation has no least summand")
        return sequences.a_term(self.q, self.indices[-1])

    def g_indices(self) -> list[int]:
        """Raw G-indices (a_9 at q=3 displays as N_13)."""
        return [2 * self.q - 2 + i for i in self.indices]


@dataclass(frozen=True)
class FarDifferenceRep:
    """Signed sum of a_i: same-sign gaps >= 2q, opposite-sign gaps >= q+1."""

    q: int
    terms: tuple[tuple[int, int], ...]  # (index, sign), indices strictly decreasing

    def value(self) -> int:
        return sum(s * sequences.a_term(self.q, i) for i, s in self.terms)

    def summands(self) -> list[tuple[int, int]]:
        """(signed value, index) per term."""
        return [(s * sequences.a_term(self.q, i), i) for i, s in self.terms]


@dataclass(frozen=True)
class TriQRepresentation:
    """Sum of distinct tribonacci a_i = T_{i+q} with no q consecutive indices."""

    q: int
    indices: tuple[int, ...]  # strictly decreasing

    def summands(self) -> list[int]:
        return [sequences.tri_a_term(self.q, i) for i in self.indices]

    def value(self) -> int:
        return sum(self.summands())


class ValidationResult(NamedTuple):
    ok: bool
    detail: str | None


def validate_q_rep(rep: QRepresentation) -> ValidationResult:
    """Check the gap and 0/1-digit constraints, reporting the first violation."""
    prev = None
    for i in rep.indices:
        if i < 0:
            return ValidationResult(False, f"negative index {i}")
        if prev is not None:
            if i >= prev:
                return ValidationResult(False, f"indices not strictly decreasing at {i}")
            if prev - i < rep.q:
                return ValidationResult(False, f"gap {prev - i} between indices {prev},{i} is < q={rep.q}")
        prev = i
    return ValidationResult(True, None)


def validate_far_difference(rep: FarDifferenceRep) -> ValidationResult:
    prev: tuple[int, int] | None = None
    for i, s in rep.terms:
        if i < 0:
            return ValidationResult(False, f"negative index {i}")
        if s not in (1, -1):
            return ValidationResult(False, f"sign must be +-1, got {s}")
        if prev is not None:
            pi, ps = prev
            if i >= pi:
                return ValidationResult(False, f"indices not strictly decreasing at {i}")
            gap, need = pi - i, 2 * rep.q if s == ps else rep.q + 1
            if gap < need:
                return ValidationResult(False, f"gap {gap} between indices {pi},{i} is < {need}")
        prev = (i, s)
    return ValidationResult(True, None)


def validate_tri_rep(rep: TriQRepresentation) -> ValidationResult:
    """No q consecutive indices may all be chosen."""
    run = 1
    prev = None
    for i in rep.indices:
        if i < 0:
            return ValidationResult(False, f"negative index {i}")
        if prev is not None:
            if i >= prev:
                return ValidationResult(False, f"indices not strictly decreasing at {i}")
            run = run + 1 if prev - i == 1 else 1
            if run >= rep.q:
                return ValidationResult(False, f"{rep.q} consecutive indices ending at {i}")
        prev = i
    return ValidationResult(True, None)


def rep_value(rep: QRepresentation) -> int:
    return rep.value()


def greedy_q_rep(q: int, n: int) -> QRepresentation:
    """The unique q-representation of n, by repeatedly taking the largest a_i <= rest."""
    if q < 1:
        raise ValueError("q must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    indices: list[int] = []
    if n:
        avals = sequences.a_values_upto(q, n)
        rest = n
        while rest:
            i = bisect_right(avals, rest, 0, len(avals)) - 1
            indices.append(i)
            rest -= avals[i]
    return QRepresentation(q, tuple(indices))


def sum_of_digits(q: int, n: int) -> int:
    """Number of summands in the greedy q-representation of n."""
    return len(greedy_q_rep(q, n).indices)


def cumulative_S(q: int, n: int) -> int:
    """Sum of sum_of_digits(q, j) over j < n, by direct per-j summation.

    For q=1 the greedy representation is binary, so the per-j digit count
    is int.bit_count; other q walk the greedy algorithm for every j.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 1:
        return 0
    if q == 1:
        return sum(map(int.bit_count, range(n)))
    avals = sequences.a_values_upto(q, n)
    total = 0
    for j in range(1, n):
        rest = j
        while rest:
            rest -= avals[bisect_right(avals, rest, 0, len(avals)) - 1]
            total += 1
    return total


def rep_to_composition(q: int, ell: int, k: int) -> Composition:
    """The map from integers in [0, a_k) to compositions of k+q-1 into parts 1 or q.

    Bit i of the length-k string is 1 iff a_i is a greedy summand of ell;
    after padding q-1 zeros on the right, a 0 reads as a part 1 and a 1
    with its following q-1 zeros as a part q. For q=1 the two kinds of 1
    are told apart by colors (1 = plain, 2 = the 'q' kind).
    """
    if not 0 <= ell < sequences.a_term(q, k):
        raise ValueError(f"ell must lie in [0, a_{k})")
    chosen = set(greedy_q_rep(q, ell).indices)
    bits = [1 if i in chosen else 0 for i in range(k)] + [0] * (q - 1)
    parts: list[int] = []
    colors: list[int] = []
    pos = 0
    while pos < len(bits):
        if bits[pos]:
            parts.append(q)
            colors.append(2)
            pos += q
        else:
            parts.append(1)
            colors.append(1)
            pos += 1
    return Composition(tuple(parts), tuple(colors) if q == 1 else None)


def _max_packing(q: int, k: int) -> int:
    """Densest same-sign sum with leading index k: a_k + a_{k-2q} + ..."""
    total = 0
    while k >= 0:
        total += sequences.a_term(q, k)
        k -= 2 * q
    return total


def far_difference_rep(q: int, n: int) -> FarDifferenceRep:
    """The unique signed representation of n >= 1 (Alpert-style, generalized).

    The leading term carries the sign of the remaining value; candidate
    leading indices are the few k where the tail bounds allow the target
    (a_k - P(k-q-1) <= |r| <= a_k + P(k-2q), P the densest same-sign
    packing), searched with backtracking. Uniqueness makes the search
    return exactly one answer; the exhaustive oracle in the tests is the
    correctness authority.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    top = sequences.largest_a_index(q, n + _max_packing(q, 0))
    while sequences.a_term(q, top + 1) - _max_packing(q, top - q) <= n:
        top += 1
    terms = _fd_search(q, n, top)
    if terms is None:
        raise AssertionError(f"no far-difference representation found for {n} (q={q})")
    rep = FarDifferenceRep(q, tuple(terms))
    ok, detail = validate_far_difference(rep)
    if not ok or rep.value() != n:
        raise AssertionError(f"far-difference construction broke its invariant: {detail}")
    return rep


def _fd_search(q: int, r: int, max_index: int) -> list[tuple[int, int]] | None:
    if r == 0:
        return []
    s = 1 if r > 0 else -1
    m = abs(r)
    for j in range(max_index, -1, -1):
        reach = sequences.a_term(q, j) + _max_packing(q, j - 2 * q)
        if reach < m:
            return None  # smaller j reaches even less
        if sequences.a_term(q, j) - _max_packing(q, j - q - 1) > m:
            continue  # overshoots; tail cannot come back down
        rest = r - s * sequences.a_term(q, j)
        # next term: same sign allowed at j-2q, opposite at j-(q+1)
        sub = _fd_search(q, rest, j - q - 1 if (rest > 0) != (r > 0) else j - 2 * q)
        if sub is not None and (not sub or _gap_ok(q, j, s, sub[0])):
            return [(j, s)] + sub
    return None


def _gap_ok(q: int, j: int, s: int, nxt: tuple[int, int]) -> bool:
    gap = j - nxt[0]
    return gap >= (2 * q if s == nxt[1] else q + 1)


def tribonacci_greedy_rep(q: int, n: int) -> TriQRepresentation:
    """Greedy representation over the tribonacci a_k = T_{k+q}."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    indices: list[int] = []
    if n:
        avals = sequences.tri_a_values_upto(q, n)
        rest = n
        while rest:
            i = bisect_right(avals, rest, 0, len(avals)) - 1
            indices.append(i)
            rest -= avals[i]
    return TriQRepresentation(q, tuple(indices))


def format_rep(rep: QRepresentation) -> str:
    if not rep.indices:
        return "0 (empty)"
    return f"{rep.value()} = " + " + ".join(str(v) for v in rep.summands())


def format_far_difference(rep: FarDifferenceRep) -> str:
    pieces: list[str] = []
    for value, _ in rep.summands():
        if not pieces:
            pieces.append(str(value) if value > 0 else f"-{-value}")
        else:
            pieces.append(f"+ {value}" if value > 0 else f"- {-value}")
    return f"{rep.value()} = " + " ".join(pieces)
