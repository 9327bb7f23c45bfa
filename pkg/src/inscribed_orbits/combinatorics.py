"""Exact integer combinatorics used by the orbit counting formula.

Everything here works on Python ints, so results never overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import factorial, gcd, isqrt
from typing import Iterator, Sequence

from .errors import DomainError

__all__ = [
    "MultiplicityVector",
    "IntegerPartition",
    "divisors",
    "totient",
    "linear_arrangements",
    "circular_arrangements",
    "enumerate_mixed_partitions",
    "enumerate_partitions",
    "enumerate_multiplicity_solutions",
]


@dataclass(frozen=True)
class MultiplicityVector:
    """Counts of objects of each kind, ``entries[i]`` objects of kind ``i``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(b) for b in self.entries))
        if any(b < 0 for b in self.entries):
            raise DomainError(f"negative multiplicity in {self.entries}")

    @property
    def total(self) -> int:
        return sum(self.entries)

    def nonzero(self) -> "MultiplicityVector":
        return MultiplicityVector(tuple(b for b in self.entries if b))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True, order=True)
class IntegerPartition:
    """A partition of ``n`` stored as a non-increasing tuple of parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if not parts or parts[-1] < 1:
            raise DomainError(f"invalid partition {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> MultiplicityVector:
        """Multiplicity of each distinct part, ordered by increasing part size."""
        distinct = sorted(set(self.parts))
        return MultiplicityVector(tuple(self.parts.count(p) for p in distinct))

    def __str__(self):
        return "+".join(str(p) for p in sorted(self.parts))


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in increasing order."""
    if n < 1:
        raise DomainError(f"divisors need n >= 1, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def totient(m: int) -> int:
    """Euler's totient by trial-division factorisation."""
    if m < 1:
        raise DomainError(f"totient is defined for m >= 1, got {m}")
    result, rest, p = m, m, 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def _as_vector(beta) -> MultiplicityVector:
    if isinstance(beta, MultiplicityVector):
        return beta
    return MultiplicityVector(tuple(beta))


def _multinomial(entries: Sequence[int]) -> int:
    out = factorial(sum(entries))
    for b in entries:
        out //= factorial(b)
    return out


def linear_arrangements(beta) -> int:
    """Number of distinct words with the given letter multiplicities."""
    vec = _as_vector(beta)
    if vec.total < 1:
        raise DomainError(f"need at least one object, got {vec.entries}")
    return _multinomial(vec.entries)


def circular_arrangements(beta) -> int:
    """Number of necklaces (words up to rotation) with the given multiplicities.

    Zero entries are dropped first. Only divisors of ``gcd(beta)`` contribute
    to the totient-weighted sum, since a rotation by ``m/d`` can fix a word
    only when every multiplicity is divisible by ``d``.
    """
    vec = _as_vector(beta).nonzero()
    if not vec.entries:
        raise DomainError("circular arrangements need a nonzero multiplicity")
    m = vec.total
    g = reduce(gcd, vec.entries)
    acc = 0
    for d in divisors(g):
        acc += totient(d) * _multinomial([b // d for b in vec.entries])
    q, r = divmod(acc, m)
    if r:  # pragma: no cover - Burnside guarantees exactness
        raise ArithmeticError(f"non-integral necklace count for {vec.entries}")
    return q


def enumerate_partitions(n: int, min_part: int = 1) -> Iterator[IntegerPartition]:
    """All partitions of ``n`` with every part ``>= min_part``.

    Yields in lexicographic order of the non-increasing part lists.
    """

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min_part, min(remaining, cap) + 1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    if n < 1:
        return
    for parts in rec(n, n):
        yield IntegerPartition(parts)


def enumerate_mixed_partitions(n: int) -> list[IntegerPartition]:
    """Partitions of ``n`` into parts >= 2 with at least two distinct part values."""
    if n < 2:
        raise DomainError(f"mixed partitions need n >= 2, got {n}")
    return [p for p in enumerate_partitions(n, 2) if len(set(p.parts)) >= 2]


def enumerate_multiplicity_solutions(kinds: int, total: int) -> list[MultiplicityVector]:
    """Nonnegative integer vectors of length ``kinds`` summing to ``total``.

    Ordered reverse-lexicographically, so ``(total, 0, ...)`` comes first.
    """
    if total < 1:
        raise DomainError(f"total must be >= 1, got {total}")
    if kinds < 0:
        raise DomainError(f"kinds must be >= 0, got {kinds}")
    if kinds == 0:
        return []
    # stars and bars: choose where the kinds-1 separators sit among total+kinds-1 slots
    slots = total + kinds - 1
    out = []
    for bars in combinations(range(slots), kinds - 1):
        edges = (-1,) + bars + (slots,)
        out.append(MultiplicityVector(tuple(edges[i + 1] - edges[i] - 1 for i in range(kinds))))
    out.reverse()
    return out
