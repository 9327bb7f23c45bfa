"""Closed-form count of perpendicularly inscribed n-periodic polygons through side 1.

The count combines three families of terms:

* mixed partitions of ``n`` (parts >= 2, at least two distinct values), each
  weighted by its necklace count times the product of pure-orbit counts;
* equal-part partitions ``d + d + ... + d`` for every divisor ``d > 1``,
  counted as necklaces of pure ``d``-orbit kinds;
* a subtraction of the orbit counts of every proper divisor ``1 < d < n``,
  removing shorter orbits traversed several times.

``O(2) = 2`` is a base value of the recursion, not a geometric count: no
2-periodic orbit exists in an odd-sided regular polygon.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import lru_cache, reduce
from math import gcd
from math import comb, prod

from .combinatorics import (
    IntegerPartition,
    circular_arrangements,
    divisors,
    linear_arrangements,
    totient,
    enumerate_mixed_partitions,
    enumerate_multiplicity_solutions,
)
from .errors import DomainError
from .transition import pure_orbit_count

__all__ = [
    "MixedTerm",
    "EqualPartTerm",
    "SubtractionTerm",
    "CountBreakdown",
    "OrbitCount",
    "count_orbits",
    "count_breakdown",
    "equal_part_contribution",
    "rotation_aware_mixed_count",
    "necklace_polynomial",
]

BASE_PERIOD_TWO = 2


@dataclass(frozen=True)
class MixedTerm:
    partition: IntegerPartition
    necklaces: int
    pure_product: int

    @property
    def contribution(self) -> int:
        return self.necklaces * self.pure_product


@dataclass(frozen=True)
class EqualPartTerm:
    divisor: int
    kinds: int
    contribution: int


@dataclass(frozen=True)
class SubtractionTerm:
    divisor: int
    orbits: int


@dataclass(frozen=True)
class CountBreakdown:
    k: int
    n: int
    mixed_terms: tuple[MixedTerm, ...] = field(default_factory=tuple)
    equal_part_terms: tuple[EqualPartTerm, ...] = field(default_factory=tuple)
    subtraction_terms: tuple[SubtractionTerm, ...] = field(default_factory=tuple)

    @property
    def mixed_total(self) -> int:
        return sum(t.contribution for t in self.mixed_terms)

    @property
    def equal_part_total(self) -> int:
        return sum(t.contribution for t in self.equal_part_terms)

    @property
    def subtraction_total(self) -> int:
        return sum(t.orbits for t in self.subtraction_terms)

    @property
    def total(self) -> int:
        return self.mixed_total + self.equal_part_total - self.subtraction_total

    def to_dict(self) -> dict:
        return {
            "mixed_terms": [
                {
                    "partition": list(t.partition.parts[::-1]),
                    "necklaces": t.necklaces,
                    "pure_product": t.pure_product,
                    "contribution": t.contribution,
                }
                for t in self.mixed_terms
            ],
            "equal_part_terms": [asdict(t) for t in self.equal_part_terms],
            "subtraction_terms": [asdict(t) for t in self.subtraction_terms],
            "mixed_total": self.mixed_total,
            "equal_part_total": self.equal_part_total,
            "subtraction_total": self.subtraction_total,
            "total": self.total,
        }

    def formula(self) -> str:
        """One-line arithmetic, e.g. ``24 + 2 + 3 + 6 - 2 - 3 = 30``."""
        plus = [str(self.mixed_total)] if self.mixed_terms else []
        plus += [str(t.contribution) for t in reversed(self.equal_part_terms)]
        minus = [str(t.orbits) for t in self.subtraction_terms]
        text = " + ".join(plus) if plus else "0"
        if minus:
            text += " - " + " - ".join(minus)
        return f"{text} = {self.total}"


@dataclass(frozen=True)
class OrbitCount:
    k: int
    n: int
    count: int


def _check(k: int, n: int) -> None:
    if int(k) != k or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if int(n) != n or n < 2:
        raise DomainError(f"period n must be an integer >= 2, got {n!r}")


ENUMERATION_LIMIT = 20_000


def equal_part_contribution(k: int, d: int, n: int) -> int:
    """Necklaces of ``n/d`` pure ``d``-orbits drawn from ``P(d)`` kinds.

    Small cases sum ``circular_arrangements`` over every multiplicity vector.
    Once that enumeration would touch more than ``ENUMERATION_LIMIT`` entries the same
    total is taken from the necklace polynomial, which is what the sum
    collapses to.
    """
    kinds = pure_orbit_count(k, d)
    length = n // d
    if kinds == 0:
        return 0
    if kinds * comb(length + kinds - 1, kinds - 1) <= ENUMERATION_LIMIT:
        return sum(
            circular_arrangements(x) for x in enumerate_multiplicity_solutions(kinds, length)
        )
    return necklace_polynomial(kinds, length)


def necklace_polynomial(colors: int, length: int) -> int:
    """Number of length-``length`` necklaces over ``colors`` letters."""
    return sum(totient(e) * colors ** (length // e) for e in divisors(length)) // length


def _breakdown(k: int, n: int, orbit_count) -> CountBreakdown:
    mixed = tuple(
        MixedTerm(
            partition=p,
            necklaces=circular_arrangements(p.multiplicities()),
            pure_product=prod(pure_orbit_count(k, part) for part in p.parts),
        )
        for p in enumerate_mixed_partitions(n)
    )
    divs = [d for d in divisors(n) if d != 1]
    equal = tuple(
        EqualPartTerm(d, pure_orbit_count(k, d), equal_part_contribution(k, d, n)) for d in divs
    )
    minus = tuple(SubtractionTerm(d, orbit_count(k, d)) for d in divs if d != n)
    return CountBreakdown(k, n, mixed, equal, minus)


@lru_cache(maxsize=None)
def _count_memo(k: int, n: int) -> int:
    if n == 2:
        return BASE_PERIOD_TWO
    return _breakdown(k, n, _count_memo).total


def _count_plain(k: int, n: int) -> int:
    if n == 2:
        return BASE_PERIOD_TWO
    return _breakdown(k, n, _count_plain).total


def count_orbits(k: int, n: int, *, memoize: bool = True) -> OrbitCount:
    """Number of n-periodic perpendicularly inscribed polygons through side 1."""
    _check(k, n)
    value = _count_memo(k, n) if memoize else _count_plain(k, n)
    return OrbitCount(k, n, value)


def count_breakdown(k: int, n: int) -> CountBreakdown:
    """Every term of the counting formula for period ``n >= 3``."""
    _check(k, n)
    if n < 3:
        raise DomainError("period 2 is a base value and has no breakdown")
    return _breakdown(k, n, _count_memo)


def rotation_aware_mixed_count(k: int, partition: IntegerPartition) -> int:
    """Necklaces of pure-orbit blocks whose lengths form ``partition``.

    Unlike ``necklaces * pure_product`` this lets a rotation fix a block
    arrangement only when it also fixes the pure-orbit choice in every
    block. The two agree unless the part multiplicities share a factor.
    Used to diagnose formula/oracle disagreements; never fed back into
    :func:`count_orbits`.
    """
    values = sorted(set(partition.parts))
    beta = [partition.parts.count(v) for v in values]
    kinds = [pure_orbit_count(k, v) for v in values]
    g = reduce(gcd, beta)
    acc = 0
    for d in divisors(g):
        acc += (
            totient(d)
            * linear_arrangements([b // d for b in beta])
            * prod(q ** (b // d) for q, b in zip(kinds, beta))
        )
    return acc // partition.m
