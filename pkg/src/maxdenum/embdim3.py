"""Closed forms for semigroups generated by three elements.

Any sorted triple ``a1 < a2 < a3`` with gcd 1 is rewritten as

    <a1, a1 + g*m, a1 + g*n>,   g = gcd(a2 - a1, a3 - a1),

with ``gcd(m, n) = gcd(a1, g) = 1``.  The maximal denumerant then depends only
on ``a1``, ``m`` and ``n`` and can be obtained three ways:

* ``dmax_min_h``: the least h >= 1 with ``h*m*n - a1`` in <m, n>;
* ``dmax_ceiling``: ``ceil(a1/mn)``, plus one unless the residue of
  ``-a1`` mod ``mn`` lies in <m, n>;
* ``dmax_bezout``: ``ceil(x/n) + ceil(y/m)`` for any ``m*x + n*y = a1``.

The triple need not be a minimal generating set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple, Optional

from .errors import (
    GcdNotOne,
    NotBasic,
    NotSorted,
    WrongEmbeddingDimension,
    check_int64,
)
from .semigroup import DmaxResult, Factorization, NumericalSemigroup, dmax_semigroup_general


@dataclass(frozen=True)
class GmnForm:
    a1: int
    g: int
    m: int
    n: int

    @property
    def a2(self) -> int:
        return self.a1 + self.g * self.m

    @property
    def a3(self) -> int:
        return self.a1 + self.g * self.n

    @property
    def generators(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)


class BezoutPair(NamedTuple):
    x: int
    y: int


def _check_sorted(a1: int, a2: int, a3: int) -> None:
    if not 0 < a1 < a2 < a3:
        raise NotSorted(f"expected 0 < a1 < a2 < a3, got ({a1}, {a2}, {a3})")


def gmn_decompose(a1: int, a2: int, a3: int) -> GmnForm:
    _check_sorted(a1, a2, a3)
    for a in (a1, a2, a3):
        check_int64(a, "generator")
    if math.gcd(a1, a2, a3) != 1:
        raise GcdNotOne(f"gcd({a1}, {a2}, {a3}) != 1")
    g = math.gcd(a2 - a1, a3 - a1)
    return GmnForm(a1, g, (a2 - a1) // g, (a3 - a1) // g)


def ceil_div(p: int, q: int) -> int:
    """Exact ceiling of ``p / q`` for ``q > 0``, including negative ``p``."""
    if q <= 0:
        raise ValueError("divisor must be positive")
    return -(-p // q)


def two_gen_contains(z: int, m: int, n: int) -> bool:
    """Is ``z`` a nonnegative combination of the coprime pair ``m, n``?

    The only candidate coefficient of ``n`` below ``m`` is ``z * n^-1 mod m``;
    ``z`` is a member exactly when that many copies of ``n`` fit into it.
    """
    if z < 0:
        return False
    if m == 1 or n == 1:
        return True
    c = (z * pow(n, -1, m)) % m
    return c * n <= z


def _min_h_cap(form: GmnForm) -> int:
    return ceil_div(form.a1, form.m * form.n) + 1


def dmax_min_h(form: GmnForm) -> DmaxResult:
    mn = check_int64(form.m * form.n, "m*n")
    cap = _min_h_cap(form)
    for h in range(1, cap + 1):
        if two_gen_contains(check_int64(h * mn - form.a1, "h*m*n - a1"), form.m, form.n):
            return DmaxResult(h, "min-h")
    raise AssertionError(f"min-h search exceeded its cap {cap} for {form}")


def dmax_ceiling(form: GmnForm) -> DmaxResult:
    mn = check_int64(form.m * form.n, "m*n")
    alpha = ((-form.a1) % mn + mn) % mn
    base = ceil_div(form.a1, mn)
    if two_gen_contains(alpha, form.m, form.n):
        return DmaxResult(base, "ceiling")
    return DmaxResult(base + 1, "ceiling")


def bezout(m: int, n: int, a1: int) -> BezoutPair:
    """The solution of ``m*x + n*y = a1`` with ``0 <= x < n``."""
    if math.gcd(m, n) != 1:
        raise GcdNotOne(f"gcd({m}, {n}) != 1")
    x = (a1 * pow(m, -1, n)) % n if n > 1 else 0
    y, r = divmod(a1 - m * x, n)
    assert r == 0
    return BezoutPair(x, y)


def bezout_formula(pair: tuple[int, int], m: int, n: int) -> int:
    x, y = pair
    return ceil_div(x, n) + ceil_div(y, m)


def dmax_bezout(form: GmnForm) -> DmaxResult:
    pair = bezout(form.m, form.n, form.a1)
    return DmaxResult(bezout_formula(pair, form.m, form.n), "bezout")


@dataclass(frozen=True)
class ReducedStructure:
    """Maximally reduced elements ``0, n*a2, ..., k*n*a2`` of a 3-generated S.

    The maximal factorizations of ``i*n*a2`` are ``p*U + q*V`` with
    ``p + q = i``.
    """

    k: int
    U: tuple[int, int, int]
    V: tuple[int, int, int]
    elements: tuple[int, ...]

    def maximal_factorizations(self, i: int) -> list[Factorization]:
        combos = (
            tuple(p * u + (i - p) * v for u, v in zip(self.U, self.V))
            for p in range(i + 1)
        )
        return sorted(Factorization(c) for c in combos)


def reduced_structure(S: NumericalSemigroup) -> ReducedStructure:
    if S.embedding_dimension != 3:
        raise WrongEmbeddingDimension(
            f"{S} has embedding dimension {S.embedding_dimension}, expected 3"
        )
    form = gmn_decompose(*S.minimal_generators)
    k = dmax_bezout(form).value - 1
    step = form.n * form.a2
    return ReducedStructure(
        k=k,
        U=(0, form.n, 0),
        V=(form.n - form.m, 0, form.m),
        elements=tuple(i * step for i in range(k + 1)),
    )


def is_basic(a1: int, a2: int, a3: int) -> bool:
    _check_sorted(a1, a2, a3)
    return math.gcd(a2 - a1, a3 - a1) == 1


BasicCase = Literal["eq_4a1", "eq_3a1", "below", "above"]


@dataclass(frozen=True)
class BasicClassification:
    case: BasicCase
    dmax_if_determined: Optional[int]


def classify_basic(a1: int, a2: int, a3: int) -> BasicClassification:
    if not is_basic(a1, a2, a3):
        raise NotBasic(f"<{a1}, {a2}, {a3}> is not basic")
    if 4 * a1 == 2 * a2 + a3:
        return BasicClassification("eq_4a1", 2)
    if 3 * a1 == a2 + a3:
        return BasicClassification("eq_3a1", 2)
    if 4 * a1 < 2 * a2 + a3:
        return BasicClassification("below", 1)
    m, n = a2 - a1, a3 - a1
    if a1 % m == 0 or a1 % n == 0:
        return BasicClassification("above", ceil_div(a1, m * n))
    return BasicClassification("above", None)


def dmax_triple(a1: int, a2: int, a3: int) -> DmaxResult:
    """Classification when it settles the value, otherwise the Bézout formula."""
    form = gmn_decompose(a1, a2, a3)
    if form.g == 1:
        determined = classify_basic(a1, a2, a3).dmax_if_determined
        if determined is not None:
            return DmaxResult(determined, "classification")
    return dmax_bezout(form)


def all_methods(a1: int, a2: int, a3: int) -> dict[str, int]:
    """Every method's value on one triple, keyed by method name."""
    form = gmn_decompose(a1, a2, a3)
    values = {
        "general": dmax_semigroup_general(NumericalSemigroup((a1, a2, a3))).value,
        "min-h": dmax_min_h(form).value,
        "ceiling": dmax_ceiling(form).value,
        "bezout": dmax_bezout(form).value,
    }
    if form.g == 1:
        determined = classify_basic(a1, a2, a3).dmax_if_determined
        if determined is not None:
            values["classification"] = determined
    return values


class TableRow(NamedTuple):
    a2: int
    a3: int
    result: DmaxResult


def multiplicity_table(a1: int, max_gen: int, basic_only: bool = False) -> list[TableRow]:
    """d_max of every triple ``<a1, a2, a3>`` with ``a1 < a2 < a3 <= max_gen``."""
    if a1 < 2:
        raise ValueError(f"multiplicity must be at least 2, got {a1}")
    if max_gen <= a1:
        raise ValueError(f"max_gen must exceed the multiplicity {a1}, got {max_gen}")
    rows = []
    for a2 in range(a1 + 1, max_gen + 1):
        for a3 in range(a2 + 1, max_gen + 1):
            if math.gcd(a1, a2, a3) != 1:
                continue
            if basic_only and not is_basic(a1, a2, a3):
                continue
            rows.append(TableRow(a2, a3, dmax_triple(a1, a2, a3)))
    return rows
