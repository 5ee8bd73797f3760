"""Numerical semigroups, their factorizations and the general maximal denumerant.

A numerical semigroup is given by generators with gcd 1.  Everything here is
indexed against the *minimal* generating set ``a_1 < ... < a_t``; raw input is
only echoed back.

The maximal denumerant of S is found by scanning every element up to

    N = (a_1 - 1) * (a_2 + ... + a_t)

for maximally reduced elements (elements where, for every generator, some
maximal-length factorization avoids that generator) and taking the largest
number of maximal factorizations among them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

from .errors import (
    EmptyGenerators,
    GcdNotOne,
    IsAllOfN,
    NonPositiveGenerator,
    NotAMember,
    check_int64,
)

Method = Literal["general", "min-h", "ceiling", "bezout", "classification"]
METHODS: tuple[str, ...] = ("general", "min-h", "ceiling", "bezout", "classification")

# Sentinel length for non-members; stays negative after N additions of 1.
_NEG = -(1 << 62)


def _apery_of(gens: Sequence[int]) -> list[int | None]:
    """Least element of <gens> in each residue class mod gens[0].

    ``None`` marks a class the generators never reach (possible while the
    gcd is not 1, e.g. during minimal-generator extraction).
    """
    a1 = gens[0]
    entries: list[int | None] = [None] * a1
    entries[0] = 0
    changed = True
    while changed:
        changed = False
        for r in range(a1):
            base = entries[r]
            if base is None:
                continue
            for a in gens[1:]:
                cand = base + a
                r2 = cand % a1
                cur = entries[r2]
                if cur is None or cand < cur:
                    entries[r2] = cand
                    changed = True
    return entries


def _in_apery(entries: Sequence[int | None], modulus: int, s: int) -> bool:
    if s < 0:
        return False
    least = entries[s % modulus]
    return least is not None and s >= least


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup built from any generating list.

    >>> S = NumericalSemigroup([15, 7, 11, 13, 15])
    >>> S.minimal_generators
    (7, 11, 13, 15)
    >>> NumericalSemigroup([1, 5]).embedding_dimension
    1
    """

    raw_generators: tuple[int, ...] = field(compare=False)
    minimal_generators: tuple[int, ...] = field(init=False)
    multiplicity: int = field(init=False)
    embedding_dimension: int = field(init=False)
    apery: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, generators: Iterable[int]):
        raw = tuple(int(a) for a in generators)
        if not raw:
            raise EmptyGenerators("at least one generator is required")
        for a in raw:
            if a < 1:
                raise NonPositiveGenerator(f"generator {a} is not positive")
            check_int64(a, "generator")
        if math.gcd(*raw) != 1:
            raise GcdNotOne(f"gcd of {list(raw)} is {math.gcd(*raw)}, not 1")

        # Ascending order means a generator can only be a combination of
        # earlier (smaller) ones, so one pass reaches the fixed point.
        kept: list[int] = []
        for a in sorted(set(raw)):
            if kept and _in_apery(_apery_of(kept), kept[0], a):
                continue
            kept.append(a)

        set_ = object.__setattr__
        set_(self, "raw_generators", raw)
        set_(self, "minimal_generators", tuple(kept))
        set_(self, "multiplicity", kept[0])
        set_(self, "embedding_dimension", len(kept))
        set_(self, "apery", tuple(_apery_of(kept)))  # type: ignore[arg-type]

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.minimal_generators)})"

    def __str__(self) -> str:
        return "<" + ", ".join(map(str, self.minimal_generators)) + ">"

    def __contains__(self, s: int) -> bool:
        return contains(self, s)

    @property
    def is_natural_numbers(self) -> bool:
        return self.multiplicity == 1

    @property
    def reduction_bound(self) -> int:
        """Every maximally reduced element is at most this value."""
        gens = self.minimal_generators
        return check_int64((gens[0] - 1) * sum(gens[1:]), "reduction bound N")


def new_semigroup(generators: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup(generators)


@dataclass(frozen=True, order=True)
class Factorization:
    """Coefficients ``(c_1, ..., c_t)`` against the minimal generators."""

    coefficients: tuple[int, ...]
    length: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        object.__setattr__(self, "length", sum(self.coefficients))

    def element(self, S: NumericalSemigroup) -> int:
        return sum(c * a for c, a in zip(self.coefficients, S.minimal_generators))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coefficients)) + ")"


@dataclass(frozen=True)
class ReducedElementReport:
    element: int
    maximal_factorizations: tuple[Factorization, ...]

    @property
    def dmax_element(self) -> int:
        return len(self.maximal_factorizations)

    @property
    def length(self) -> int:
        return self.maximal_factorizations[0].length


@dataclass(frozen=True)
class DmaxResult:
    value: int
    method: Method

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.value < 1:
            raise ValueError(f"maximal denumerant must be positive, got {self.value}")


def contains(S: NumericalSemigroup, s: int) -> bool:
    """Membership test through the Apéry set of the multiplicity."""
    return _in_apery(S.apery, S.multiplicity, s)


def apery_set(S: NumericalSemigroup) -> list[int]:
    return list(S.apery)


def frobenius_number(S: NumericalSemigroup) -> int:
    if S.is_natural_numbers:
        raise IsAllOfN("N has no Frobenius number")
    return max(S.apery) - S.multiplicity


def factorizations(S: NumericalSemigroup, s: int) -> list[Factorization]:
    """All factorizations of ``s``, sorted lexicographically.

    Empty when ``s`` is not in S (including negative ``s``).
    """
    check_int64(s, "element")
    if not contains(S, s):
        return []
    gens = S.minimal_generators
    coeffs = [0] * len(gens)
    found: list[tuple[int, ...]] = []

    def descend(i: int, rest: int) -> None:
        if i == 0:
            q, r = divmod(rest, gens[0])
            if r == 0:
                coeffs[0] = q
                found.append(tuple(coeffs))
            return
        a = gens[i]
        for c in range(rest // a, -1, -1):
            coeffs[i] = c
            descend(i - 1, rest - c * a)
        coeffs[i] = 0

    descend(len(gens) - 1, s)
    found.sort()
    return [Factorization(c) for c in found]


def denumerant(S: NumericalSemigroup, s: int) -> int:
    return len(factorizations(S, s))


def _require_member(S: NumericalSemigroup, s: int) -> None:
    if not contains(S, s):
        raise NotAMember(f"{s} is not an element of {S}")


def maximal_factorizations(S: NumericalSemigroup, s: int) -> list[Factorization]:
    _require_member(S, s)
    facts = factorizations(S, s)
    longest = max(f.length for f in facts)
    return [f for f in facts if f.length == longest]


def max_length(S: NumericalSemigroup, s: int) -> int:
    return maximal_factorizations(S, s)[0].length


def dmax_element(S: NumericalSemigroup, s: int) -> int:
    return len(maximal_factorizations(S, s))


def _avoids_every_index(facts: Sequence[Factorization], t: int) -> bool:
    return all(any(f.coefficients[i] == 0 for f in facts) for i in range(t))


def is_maximally_reduced(S: NumericalSemigroup, s: int) -> bool:
    return _avoids_every_index(maximal_factorizations(S, s), S.embedding_dimension)


def reduce_to_maximally_reduced(S: NumericalSemigroup, s: int) -> int:
    """Strip the coefficients shared by every maximal factorization of ``s``."""
    facts = maximal_factorizations(S, s)
    common = [min(f.coefficients[i] for f in facts) for i in range(S.embedding_dimension)]
    return s - sum(c * a for c, a in zip(common, S.minimal_generators))


def _length_table(gens: Sequence[int], limit: int) -> list[int]:
    """Maximal factorization length of every 0 <= s <= limit over ``gens``.

    Entries below zero mark values the generators cannot reach.
    """
    table = [_NEG] * (limit + 1)
    table[0] = 0
    gens = sorted(gens)
    if not gens:
        return table
    for s in range(gens[0], limit + 1):
        best = _NEG
        for a in gens:
            if a > s:
                break
            v = table[s - a]
            if v > best:
                best = v
        table[s] = best + 1
    return table


def maximally_reduced_elements(S: NumericalSemigroup) -> list[ReducedElementReport]:
    """Reports for all maximally reduced elements, ascending.

    An element qualifies exactly when, for each generator, dropping that
    generator does not shorten its longest factorization.
    """
    gens = list(S.minimal_generators)
    bound = S.reduction_bound
    full = _length_table(gens, bound)
    candidates = [s for s in range(bound + 1) if full[s] >= 0]
    for i in range(len(gens)):
        without = _length_table(gens[:i] + gens[i + 1:], bound)
        candidates = [s for s in candidates if without[s] == full[s]]
    return [
        ReducedElementReport(s, tuple(maximal_factorizations(S, s))) for s in candidates
    ]


def dmax_semigroup_general(S: NumericalSemigroup) -> DmaxResult:
    reports = maximally_reduced_elements(S)
    return DmaxResult(max(r.dmax_element for r in reports), "general")
