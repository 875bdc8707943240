"""Padovan and tribonacci composition-count verifiers, built on the shared
compositions DP so a failure isolates to the sequence side or the
constraint encoding.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sequences
from .compositions import PartConstraint, count_compositions


@dataclass(frozen=True)
class AnalogReport:
    claim: str
    q: int
    n_max: int
    ok: bool
    counterexample: dict | None = None

    def __str__(self) -> str:
        head = f"{self.claim} (q={self.q}, n<=:{self.n_max}): "
        return head + ("pass" if self.ok else f"FAIL at {self.counterexample}")


def padovan_constraints(q: int) -> tuple[PartConstraint, PartConstraint, PartConstraint]:
    """The three part rules: {q-1, q}; q-1 (mod q); 1 (mod q-1) excluding 1."""
    return (
        PartConstraint.finite_set({q - 1: 1, q: 1}),
        PartConstraint.residue_class(q, {q - 1}),
        PartConstraint.residue_class(q - 1, {1 % (q - 1)}, exclude={1}),
    )


def verify_padovan_counts(q: int, n_max: int) -> AnalogReport:
    """p_n == c_{n-q+1}({q-1, q}) for n >= q; p_n == c_n(q-1 mod q) and
    p_n == c_{n+1}(1 mod q-1, part != 1) for n >= 1."""
    if q < 2:
        raise ValueError("q must be >= 2 (q=2 degenerates to the Fibonacci case)")
    pair, residue, shifted = padovan_constraints(q)
    for n in range(q, n_max + 1):
        lhs, rhs = sequences.p_term(q, n), count_compositions(n - q + 1, pair)
        if lhs != rhs:
            return AnalogReport("padovanCounts", q, n_max, False,
                                {"equality": "pair", "n": n, "p_n": lhs, "count": rhs})
    for n in range(1, n_max + 1):
        lhs, rhs = sequences.p_term(q, n), count_compositions(n, residue)
        if lhs != rhs:
            return AnalogReport("padovanCounts", q, n_max, False,
                                {"equality": "residue", "n": n, "p_n": lhs, "count": rhs})
        rhs = count_compositions(n + 1, shifted)
        if lhs != rhs:
            return AnalogReport("padovanCounts", q, n_max, False,
                                {"equality": "shifted", "n": n, "p_n": lhs, "count": rhs})
    return AnalogReport("padovanCounts", q, n_max, True)


def verify_tribonacci_counts(q: int, n_max: int) -> AnalogReport:
    """T_n == c_{n-q+1}({1..q}) for n >= q; U_n == c_n({1..q-1} mod q) for n >= 1."""
    if q < 2:
        raise ValueError("q must be >= 2")
    window = PartConstraint.finite_set({v: 1 for v in range(1, q + 1)})
    residues = PartConstraint.residue_class(q, set(range(1, q)))
    for n in range(q, n_max + 1):
        lhs, rhs = sequences.t_term(q, n), count_compositions(n - q + 1, window)
        if lhs != rhs:
            return AnalogReport("tribonacciCounts", q, n_max, False,
                                {"equality": "window", "n": n, "T_n": lhs, "count": rhs})
    for n in range(1, n_max + 1):
        lhs, rhs = sequences.u_term(q, n), count_compositions(n, residues)
        if lhs != rhs:
            return AnalogReport("tribonacciCounts", q, n_max, False,
                                {"equality": "residues", "n": n, "U_n": lhs, "count": rhs})
    return AnalogReport("tribonacciCounts", q, n_max, True)


def sills_analog_probe(q: int, n_max: int) -> list[tuple[int, int, int]]:
    """Side-by-side counts (n, c_n(q-1 mod q), c_{n+1}(1 mod q-1, != 1)) for
    inspecting the open bijection question; no bijection is attempted."""
    if q < 3:
        raise ValueError("q must be >= 3")
    _, residue, shifted = padovan_constraints(q)
    return [
        (n, count_compositions(n, residue), count_compositions(n + 1, shifted))
        for n in range(1, n_max + 1)
    ]
