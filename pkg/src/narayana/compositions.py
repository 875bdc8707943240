"""Compositions under part constraints; MacMahon bit sequences and the Sills bijection.

A composition is an ordered tuple of positive parts. Constraints come in
three kinds: a finite part set with multiplicities (colored parts), a
residue class with finitely many excluded values, and a lower threshold.
Counting is exact DP; enumeration doubles as the counting oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping

DEFAULT_ENUMERATION_BOUND = 40


@dataclass(frozen=True)
class Composition:
    """Ordered parts; `colors` distinguishes copies of a multiplicity-m part (1..m)."""

    parts: tuple[int, ...]
    colors: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive")
        if self.colors is not None and len(self.colors) != len(self.parts):
            raise ValueError("colors must label every part")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return " + ".join(str(p) for p in self.parts) if self.parts else "(empty)"


class ConstraintKind(str, Enum):
    FINITE_SET = "finiteSet"
    RESIDUE_SET = "residueSet"
    AT_LEAST = "atLeast"


@dataclass(frozen=True)
class PartConstraint:
    kind: ConstraintKind
    finite: tuple[tuple[int, int], ...] = ()  # (part value, multiplicity), sorted
    modulus: int = 0
    residues: frozenset[int] = frozenset()
    excluded: frozenset[int] = frozenset()
    threshold: int = 0

    @staticmethod
    def finite_set(multiplicities: Mapping[int, int]) -> "PartConstraint":
        items = tuple(sorted(multiplicities.items()))
        if not items:
            raise ValueError("finite part set must be nonempty")
        if any(v < 1 or m < 1 for v, m in items):
            raise ValueError("parts must be positive with multiplicity >= 1")
        return PartConstraint(ConstraintKind.FINITE_SET, finite=items)

    @staticmethod
    def residue_class(modulus: int, residues, exclude=()) -> "PartConstraint":
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        rs = frozenset(r % modulus for r in residues)
        if not rs:
            raise ValueError("residue set must be nonempty")
        return PartConstraint(
            ConstraintKind.RESIDUE_SET, modulus=modulus, residues=rs, excluded=frozenset(exclude)
        )

    @staticmethod
    def at_least(threshold: int, exclude=()) -> "PartConstraint":
        if threshold < 1:
            raise ValueError("threshold must be >= 1")
        return PartConstraint(
            ConstraintKind.AT_LEAST, threshold=threshold, excluded=frozenset(exclude)
        )

    def multiplicity(self, part: int) -> int:
        """How many colors of `part` are admissible (0 = not admissible)."""
        if part < 1 or part in self.excluded:
            return 0
        if self.kind is ConstraintKind.FINITE_SET:
            for v, m in self.finite:
                if v == part:
                    return m
            return 0
        if self.kind is ConstraintKind.RESIDUE_SET:
            return 1 if part % self.modulus in self.residues else 0
        return 1 if part >= self.threshold else 0

    def parts_upto(self, bound: int) -> Iterator[tuple[int, int]]:
        """(part, multiplicity) pairs with part <= bound, ascending."""
        if self.kind is ConstraintKind.FINITE_SET:
            for v, m in self.finite:
                if v <= bound and v not in self.excluded:
                    yield v, m
        else:
            for v in range(1, bound + 1):
                m = self.multiplicity(v)
                if m:
                    yield v, m

    def describe(self) -> str:
        if self.kind is ConstraintKind.FINITE_SET:
            body = ",".join(f"{v}x{m}" if m > 1 else str(v) for v, m in self.finite)
            return f"set:{body}"
        if self.kind is ConstraintKind.RESIDUE_SET:
            body = f"mod:{self.modulus}:{','.join(map(str, sorted(self.residues)))}"
        else:
            body = f"min:{self.threshold}"
        if self.excluded:
            body += "!" + ",".join(map(str, sorted(self.excluded)))
        return body


def parse_constraint(text: str) -> PartConstraint:
    """Parse the CLI mini-syntax: set:1,3  set:1x2  mod:3:1,2  min:3  mod:2:1!1."""
    body, excl = text, ()
    if "!" in text:
        body, excl_text = text.split("!", 1)
        excl = tuple(int(x) for x in excl_text.split(","))
    if ":" not in body:
        raise ValueError(f"cannot parse constraint {text!r} (expected set:/mod:/min:)")
    try:
        head, rest = body.split(":", 1)
        if head == "set":
            mult: dict[int, int] = {}
            for item in rest.split(","):
                if "x" in item:
                    v, m = item.split("x", 1)
                    mult[int(v)] = int(m)
                else:
                    mult[int(item)] = mult.get(int(item), 1)
            if excl:
                raise ValueError("exclusions apply to mod:/min: constraints only")
            return PartConstraint.finite_set(mult)
        if head == "mod":
            m_text, r_text = rest.split(":", 1)
            return PartConstraint.residue_class(
                int(m_text), (int(r) for r in r_text.split(",")), exclude=excl
            )
        if head == "min":
            return PartConstraint.at_least(int(rest), exclude=excl)
    except ValueError:
        raise
    except Exception as exc:  # malformed shapes funnel into one error
        raise ValueError(f"cannot parse constraint {text!r}") from exc
    raise ValueError(f"unknown constraint kind {head!r}")


def count_compositions(n: int, constraint: PartConstraint) -> int:
    """Number of compositions of n with admissible parts, colored parts weighted.

    DP over remainders; exact unbounded integers throughout. n=0 counts 1
    (the empty composition).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    ways = [0] * (n + 1)
    ways[0] = 1
    parts = list(constraint.parts_upto(n))
    for j in range(1, n + 1):
        total = 0
        for v, m in parts:
            if v > j:
                break
            total += m * ways[j - v]
        ways[j] = total
    return ways[n]


def enumerate_compositions(
    n: int, constraint: PartConstraint, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[Composition]:
    """All admissible compositions of n, colored copies listed separately.

    Ordered lexicographically by (part value, color) at each position, so
    `len(result) == count_compositions(n, constraint)` exactly.
    """
    if n > bound:
        raise ValueError(f"n={n} exceeds enumeration bound {bound}")
    if n < 0:
        raise ValueError("n must be >= 0")
    colored = any(m > 1 for _, m in constraint.parts_upto(n))
    out: list[Composition] = []
    parts: list[int] = []
    colors: list[int] = []

    def extend(remaining: int) -> None:
        if remaining == 0:
            out.append(Composition(tuple(parts), tuple(colors) if colored else None))
            return
        for v, m in constraint.parts_upto(remaining):
            parts.append(v)
            for color in range(1, m + 1):
                colors.append(color)
                extend(remaining - v)
                colors.pop()
            parts.pop()

    extend(n)
    return out


def macmahon_sequence(comp: Composition) -> tuple[int, ...]:
    """MacMahon bit sequence: each part p becomes p-1 zeros then a one,
    except the last part, which drops its trailing one. Length n-1."""
    if not comp.parts:
        raise ValueError("empty composition has no MacMahon sequence")
    if comp.colors is not None:
        raise ValueError("MacMahon sequence is defined for uncolored compositions")
    bits: list[int] = []
    for p in comp.parts[:-1]:
        bits.extend([0] * (p - 1))
        bits.append(1)
    bits.extend([0] * (comp.parts[-1] - 1))
    return tuple(bits)


def macmahon_inverse(bits) -> Composition:
    """Composition of len(bits)+1 whose MacMahon sequence is `bits`."""
    parts: list[int] = []
    run = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError("bits must be 0 or 1")
        if b:
            parts.append(run + 1)
            run = 0
        else:
            run += 1
    parts.append(run + 1)
    return Composition(tuple(parts))


def conjugate(comp: Composition) -> Composition:
    """Composition of the same n whose MacMahon sequence is bit-flipped."""
    return macmahon_inverse(tuple(1 - b for b in macmahon_sequence(comp)))


def sills_map(q: int, comp: Composition) -> Composition:
    """Bijection from compositions with parts = 1 (mod q) of n to
    compositions of n+q-1 with parts >= q: conjugate, then add q-1 to the
    parts at positions 0 (mod q), which are the only ones exceeding 1."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if not comp.parts:
        raise ValueError("empty composition")
    bad = [p for p in comp.parts if p % q != 1]
    if bad:
        raise ValueError(f"parts must be 1 (mod {q}); offending part {bad[0]}")
    conj = conjugate(comp)
    if len(conj.parts) % q != 1 or any(
        p != 1 for i, p in enumerate(conj.parts) if i % q != 0
    ):
        raise AssertionError("conjugate shape off: expected q-1 ones after each kept part")
    return Composition(tuple(p + q - 1 for p in conj.parts[::q]))


def sills_inverse(q: int, comp: Composition) -> Composition:
    """Inverse of sills_map: strip q-1 from every part, reinsert the q-1
    ones between consecutive survivors, conjugate back."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if not comp.parts:
        raise ValueError("empty composition")
    bad = [p for p in comp.parts if p < q]
    if bad:
        raise ValueError(f"parts must be >= {q}; offending part {bad[0]}")
    qs = [p - (q - 1) for p in comp.parts]
    interleaved: list[int] = []
    for i, v in enumerate(qs):
        if i:
            interleaved.extend([1] * (q - 1))
        interleaved.append(v)
    result = conjugate(Composition(tuple(interleaved)))
    if any(p % q != 1 for p in result.parts):
        raise AssertionError("inverse image has a part not 1 (mod q)")
    return result
