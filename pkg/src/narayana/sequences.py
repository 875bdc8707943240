"""Fundamental recurrences of the Narayana, tribonacci and Padovan families.

Each family of degree q has characteristic polynomial

    narayana    x^q - x^(q-1) - 1        (q >= 1)
    tribonacci  x^q - x^(q-1) - ... - 1  (q >= 2)
    padovan     x^q - x - 1              (q >= 2)

and its fundamental recurrence starts with q-1 zeros followed by a one.
All values are unbounded Python ints; terms are cached and extended on
demand, forward and (where the recurrence stays integral) backward.
"""

from __future__ import annotations

import threading
from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum


class Family(str, Enum):
    NARAYANA = "narayana"
    TRIBONACCI = "tribonacci"
    PADOVAN = "padovan"

    @property
    def min_q(self) -> int:
        return 1 if self is Family.NARAYANA else 2

    def lags(self, q: int) -> tuple[int, ...]:
        """Recurrence lags: term[k] = sum of term[k - d] over the lags d."""
        if self is Family.NARAYANA:
            return (1, q)
        if self is Family.TRIBONACCI:
            return tuple(range(1, q + 1))
        return (q - 1, q)


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    q: int

    def __post_init__(self) -> None:
        if self.q < self.family.min_q:
            raise ValueError(f"{self.family.value} requires q >= {self.family.min_q}, got {self.q}")


class SequenceCache:
    """Grow-on-demand store for one linear recurrence over signed indices.

    Callers only ever receive ints or list copies, never the internal
    buffers; extension is serialized by a per-cache lock.
    """

    def __init__(self, lags: tuple[int, ...], initial: list[int], allow_negative: bool = True):
        if len(initial) != max(lags):
            raise ValueError("need exactly max(lags) initial values")
        self._lags = lags
        self._q = max(lags)
        self._fwd = list(initial)
        self._bwd: list[int] = []  # terms at indices -1, -2, ...
        self._allow_negative = allow_negative
        self._lock = threading.Lock()

    def term(self, k: int) -> int:
        if k >= 0:
            with self._lock:
                self._extend_fwd(k)
                return self._fwd[k]
        if not self._allow_negative:
            raise ValueError(f"negative index {k} not supported for this sequence")
        with self._lock:
            self._extend_bwd(-k)
            return self._bwd[-k - 1]

    def prefix(self, n: int) -> list[int]:
        """Terms at indices 0..n-1 as a fresh list."""
        with self._lock:
            self._extend_fwd(n - 1)
            return self._fwd[:n]

    def values_upto(self, bound: int, start: int = 0) -> list[int]:
        """Terms from index `start` while they stay <= bound.

        Only meaningful for eventually strictly increasing sequences; the
        scan stops at the first term exceeding the bound.
        """
        out: list[int] = []
        k = start
        while True:
            v = self.term(k)
            if v > bound:
                return out
            out.append(v)
            k += 1

    def _extend_fwd(self, k: int) -> None:
        while len(self._fwd) <= k:
            m = len(self._fwd)
            self._fwd.append(sum(self._fwd[m - d] for d in self._lags))

    def _extend_bwd(self, depth: int) -> None:
        # Backward recurrence: t[k] = t[k+q] - sum(t[k+q-d] for the lags d < q).
        while len(self._bwd) < depth:
            k = -len(self._bwd) - 1
            val = self._at(k + self._q)
            for d in self._lags:
                if d != self._q:
                    val -= self._at(k + self._q - d)
            self._bwd.append(val)

    def _at(self, i: int) -> int:
        if i >= 0:
            self._extend_fwd(i)
            return self._fwd[i]
        return self._bwd[-i - 1]


_CACHES: dict[tuple, SequenceCache] = {}
_CACHES_LOCK = threading.Lock()


def _fundamental(family: Family, q: int) -> SequenceCache:
    params = FamilyParams(family, q)  # validates q
    key = (family, q)
    with _CACHES_LOCK:
        cache = _CACHES.get(key)
        if cache is None:
            initial = [0] * (q - 1) + [1]
            # q=1 narayana doubles forward, so running it backward leaves
            # the integers; every other case is integral.
            allow_neg = not (family is Family.NARAYANA and q == 1)
            cache = SequenceCache(params.family.lags(q), initial, allow_neg)
            _CACHES[key] = cache
        return cache


def _u_cache(q: int) -> SequenceCache:
    if q < 2:
        raise ValueError(f"U sequence requires q >= 2, got {q}")
    key = ("u", q)
    with _CACHES_LOCK:
        cache = _CACHES.get(key)
        if cache is None:
            initial = [0] + [1 << (i - 1) for i in range(1, q)]
            cache = SequenceCache(tuple(range(1, q + 1)), initial, allow_negative=False)
            _CACHES[key] = cache
        return cache


def g_term(q: int, k: int) -> int:
    """G^q_k of the Narayana family: G_{k+q} = G_{k+q-1} + G_k.

    Negative k uses the backward recurrence, except for q=1 where the
    backward step is a halving and leaves the integers.
    """
    return _fundamental(Family.NARAYANA, q).term(k)


def a_term(q: int, k: int) -> int:
    """a_k = G_{2q-2+k}, the strictly increasing tail starting at the last 1."""
    if k < 0:
        raise ValueError(f"a_k defined for k >= 0, got {k}")
    return g_term(q, 2 * q - 2 + k)


def t_term(q: int, k: int) -> int:
    """Generalized tribonacci: T_{k+q} = T_{k+q-1} + ... + T_k."""
    return _fundamental(Family.TRIBONACCI, q).term(k)


def p_term(q: int, k: int) -> int:
    """Generalized Padovan: p_{k+q} = p_{k+1} + p_k."""
    return _fundamental(Family.PADOVAN, q).term(k)


def u_term(q: int, k: int) -> int:
    """U with the tribonacci recursion and initials U_0=0, U_i=2^(i-1) for i<q."""
    if k < 0:
        raise ValueError(f"U_k defined for k >= 0, got {k}")
    return _u_cache(q).term(k)


def tri_a_term(q: int, k: int) -> int:
    """a_k = T_{k+q}, the summand sequence for tribonacci q-representations."""
    if k < 0:
        raise ValueError(f"a_k defined for k >= 0, got {k}")
    return t_term(q, k + q)


def g_prefix(q: int, n: int) -> list[int]:
    """[G_0, ..., G_{n-1}]."""
    return _fundamental(Family.NARAYANA, q).prefix(n)


def a_values_upto(q: int, bound: int) -> list[int]:
    """[a_0, a_1, ...] while a_k <= bound (a is strictly increasing)."""
    if bound < 1:
        return []
    return _fundamental(Family.NARAYANA, q).values_upto(bound, start=2 * q - 2)


def tri_a_values_upto(q: int, bound: int) -> list[int]:
    """[a_0, a_1, ...] of the tribonacci summand sequence while a_k <= bound."""
    if bound < 1:
        return []
    return _fundamental(Family.TRIBONACCI, q).values_upto(bound, start=q)


def largest_a_index(q: int, n: int) -> int:
    """Largest k with a_k <= n; requires n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    vals = a_values_upto(q, n)
    return bisect_right(vals, n) - 1


def count_gap_strings(q: int, k: int) -> int:
    """Binary strings of length k whose ones are separated by >= q-1 zeros.

    Independent DP over a cooldown state (positions left before a one is
    allowed again); never consults the cached sequences.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    counts = [1] + [0] * (q - 1)  # counts[c] = strings whose next one needs c more zeros
    for _ in range(k):
        nxt = [0] * q
        for c, m in enumerate(counts):
            if not m:
                continue
            nxt[max(c - 1, 0)] += m  # append 0
            if c == 0:
                nxt[q - 1] += m  # append 1, cooldown restarts
        counts = nxt
    return sum(counts)


def count_no_q_ones(q: int, k: int) -> int:
    """Binary strings of length k with no q consecutive ones, by DP."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if k < 0:
        raise ValueError("k must be >= 0")
    counts = [1] + [0] * (q - 1)  # counts[r] = strings ending in a run of r ones
    for _ in range(k):
        nxt = [0] * q
        nxt[0] = sum(counts)  # append 0
        for r in range(q - 1):
            nxt[r + 1] += counts[r]  # append 1, run must stay < q
        counts = nxt
    return sum(counts)
