"""Exact verifiers for the G-number identities, the digit-sum constant c_A,
the cross-degree footnote identity, and the coincidence scan between
consecutive degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import representations, sequences
from .beatty import CertifiedInterval, RefinementBudgetError, dominant_root, log_enclosure


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    q: int
    n_max: int
    ok: bool
    counterexample: dict | None = None

    def __str__(self) -> str:
        head = f"{self.identity} (q={self.q}, n<=:{self.n_max}): "
        return head + ("pass" if self.ok else f"FAIL at {self.counterexample}")


def verify_sum_identity(q: int, n_max: int) -> IdentityReport:
    """G_{n+q} - 1 == G_0 + ... + G_n for n in 0..n_max."""
    if q < 1:
        raise ValueError("q must be >= 1")
    terms = sequences.g_prefix(q, n_max + q + 1)
    running = 0
    for n in range(n_max + 1):
        running += terms[n]
        if terms[n + q] - 1 != running:
            return IdentityReport("sumG", q, n_max, False,
                                  {"n": n, "lhs": terms[n + q] - 1, "rhs": running})
    return IdentityReport("sumG", q, n_max, True)


def binomial_diagonal_sum(q: int, n: int) -> int:
    """Sum of C(n - k(q-1), k) for k = 0..floor(n/q); equals G_{n+q-1}."""
    if q < 1 or n < 0:
        raise ValueError("need q >= 1 and n >= 0")
    return sum(comb(n - k * (q - 1), k) for k in range(n // q + 1))


def binomial_diagonal_coeffs(q: int, n: int) -> tuple[int, ...]:
    """Coefficient list of f_n(x) = sum_k C(n - k(q-1), k) x^k."""
    return tuple(comb(n - k * (q - 1), k) for k in range(n // q + 1))


def weighted_binomial_sum(q: int, n: int) -> int:
    """Sum of k * C(n - k(q-1), k); equals the cumulative digit sum at G_{n+q-1}."""
    if q < 1 or n < 0:
        raise ValueError("need q >= 1 and n >= 0")
    return sum(k * comb(n - k * (q - 1), k) for k in range(n // q + 1))


def verify_binomial_identity(q: int, n_max: int) -> IdentityReport:
    for n in range(n_max + 1):
        lhs = binomial_diagonal_sum(q, n)
        rhs = sequences.g_term(q, n + q - 1)
        if lhs != rhs:
            return IdentityReport("binomialDiagonal", q, n_max, False,
                                  {"n": n, "lhs": lhs, "rhs": rhs})
    return IdentityReport("binomialDiagonal", q, n_max, True)


def verify_weighted_identity(q: int, n_max: int) -> IdentityReport:
    """weighted_binomial_sum(q, n) == S_A(G_{n+q-1}), the cumulative side
    coming from per-j direct summation with no binomial involvement."""
    for n in range(n_max + 1):
        boundary = sequences.g_term(q, n + q - 1)
        lhs = representations.cumulative_S(q, boundary)
        rhs = weighted_binomial_sum(q, n)
        if lhs != rhs:
            return IdentityReport("weightedBinomial", q, n_max, False,
                                  {"n": n, "S_A": lhs, "sum": rhs})
    return IdentityReport("weightedBinomial", q, n_max, True)


def c_A_constant(q: int, precision_digits: int, max_rounds: int = 8) -> CertifiedInterval:
    """Certified enclosure of 1/(alpha * g_q'(alpha) * ln(alpha)).

    alpha is the dominant zero of g_q; for q=1 the polynomial reads x - 2,
    so alpha = 2 exactly and the constant is 1/(2 ln 2). Width of the
    returned interval is <= 10^-precision_digits.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if precision_digits < 1:
        raise ValueError("precision_digits must be >= 1")
    target = Fraction(1, 10**precision_digits)
    root_width = Fraction(1, 10 ** (precision_digits + 3))
    log_err = root_width
    for _ in range(max_rounds):
        if q == 1:
            lo = hi = Fraction(2)
        else:
            root = dominant_root(q, root_width)
            lo, hi = root.lo, root.hi
        # x*g_q'(x) = q x^q - (q-1) x^(q-1), increasing for x >= 1
        d_lo = q * lo**q - (q - 1) * hi ** (q - 1)
        d_hi = q * hi**q - (q - 1) * lo ** (q - 1)
        ln_lo = log_enclosure(lo, log_err).lo
        ln_hi = log_enclosure(hi, log_err).hi
        if d_lo > 0 and ln_lo > 0:
            c = CertifiedInterval(1 / (d_hi * ln_hi), 1 / (d_lo * ln_lo))
            if c.width <= target:
                return c
        root_width /= 10**precision_digits
        log_err = root_width
    raise RefinementBudgetError(f"c_A precision 10^-{precision_digits} unreachable for q={q}")


def footnote_identity_check(q: int) -> IdentityReport:
    """G_{3q-3+i} == q + i(i+1)/2 for 1 <= i <= q+1, and G_{4q-1} == G'_{4q+2}
    with G' the family of degree q+1."""
    if q < 1:
        raise ValueError("q must be >= 1")
    for i in range(1, q + 2):
        lhs = sequences.g_term(q, 3 * q - 3 + i)
        rhs = q + i * (i + 1) // 2
        if lhs != rhs:
            return IdentityReport("footnote", q, q + 1, False,
                                  {"i": i, "lhs": lhs, "rhs": rhs})
    lhs = sequences.g_term(q, 4 * q - 1)
    rhs = sequences.g_term(q + 1, 4 * q + 2)
    if lhs != rhs:
        return IdentityReport("footnote", q, q + 1, False,
                              {"G_{4q-1}": lhs, "G'_{4q+2}": rhs})
    return IdentityReport("footnote", q, q + 1, True)


def cross_family_coincidences(q: int, bound: int) -> list[tuple[int, int, int]]:
    """Common values <= bound of G^q and G^(q+1) past the initial 0/1 block,
    as (value, index in G, index in G'), by merged scan of both sequences."""
    if q < 1 or bound < 1:
        raise ValueError("need q >= 1 and bound >= 1")
    out: list[tuple[int, int, int]] = []
    i = 2 * q - 1      # first index with G^q = 2; strictly increasing onward
    j = 2 * q + 1      # same for degree q+1
    gi = sequences.g_term(q, i)
    gj = sequences.g_term(q + 1, j)
    while gi <= bound and gj <= bound:
        if gi == gj:
            out.append((gi, i, j))
            i += 1
            j += 1
            gi = sequences.g_term(q, i)
            gj = sequences.g_term(q + 1, j)
        elif gi < gj:
            i += 1
            gi = sequences.g_term(q, i)
        else:
            j += 1
            gj = sequences.g_term(q + 1, j)
    return out
