"""Side-transition graph of a regular (2k+1)-gon and its exact walk counts.

Sides are labelled 1..2k+1 counterclockwise. A perpendicular raised from
side ``i`` can only leave the polygon through side ``i+k`` or ``i+k+1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import DomainError

Matrix = tuple[tuple[int, ...], ...]

__all__ = [
    "TransitionSystem",
    "ExactMatrix",
    "successors",
    "adjacency_matrix",
    "pruned_adjacency_matrix",
    "shift_matrix",
    "matrix_power",
    "closed_walk_count",
    "closed_walk_count_binomial",
    "pure_orbit_count",
]


@dataclass(frozen=True)
class TransitionSystem:
    k: int

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")

    @property
    def sides(self) -> int:
        return 2 * self.k + 1

    def wrap(self, label: int) -> int:
        """Reduce an integer to a side label in 1..2k+1."""
        return (label - 1) % self.sides + 1

    def check_label(self, label: int) -> None:
        if not 1 <= label <= self.sides:
            raise DomainError(f"side label {label} outside 1..{self.sides}")


def _system(sys_or_k) -> TransitionSystem:
    if isinstance(sys_or_k, TransitionSystem):
        return sys_or_k
    return TransitionSystem(sys_or_k)


@dataclass(frozen=True)
class ExactMatrix:
    """Dense square matrix of Python ints. Indexing is 0-based internally."""

    rows: Matrix

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise DomainError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @property
    def order(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, order: int) -> "ExactMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(order)) for i in range(order)))

    def entry(self, i: int, j: int) -> int:
        """1-based entry access, matching side labels."""
        return self.rows[i - 1][j - 1]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if other.order != self.order:
            raise DomainError("order mismatch")
        cols = list(zip(*other.rows))
        return ExactMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c) if a) for c in cols) for r in self.rows)
        )

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def successors(sys_or_k, i: int) -> tuple[int, int]:
    """The two sides reachable by a perpendicular from side ``i``."""
    s = _system(sys_or_k)
    s.check_label(i)
    return s.wrap(i + s.k), s.wrap(i + s.k + 1)


@lru_cache(maxsize=None)
def _adjacency(k: int) -> ExactMatrix:
    s = TransitionSystem(k)
    m = s.sides
    rows = []
    for i in range(1, m + 1):
        row = [0] * m
        for j in successors(s, i):
            row[j - 1] = 1
        rows.append(row)
    return ExactMatrix(rows)


def adjacency_matrix(sys_or_k) -> ExactMatrix:
    return _adjacency(_system(sys_or_k).k)


def pruned_adjacency_matrix(sys_or_k) -> ExactMatrix:
    """Adjacency matrix with every edge touching side 1 deleted."""
    a = adjacency_matrix(sys_or_k).tolist()
    for j in range(len(a)):
        a[0][j] = 0
        a[j][0] = 0
    return ExactMatrix(a)


def shift_matrix(sys_or_k) -> ExactMatrix:
    """Basic circulant shift: row ``i`` has its single one in column ``i+1``."""
    s = _system(sys_or_k)
    m = s.sides
    return ExactMatrix(tuple(tuple(int(j == i % m) for j in range(m)) for i in range(1, m + 1)))


def matrix_power(M: ExactMatrix, e: int) -> ExactMatrix:
    """Exact ``M**e`` by repeated squaring."""
    if e < 0:
        raise DomainError(f"exponent must be >= 0, got {e}")
    result = ExactMatrix.identity(M.order)
    base = M
    while e:
        if e & 1:
            result = result @ base
        e >>= 1
        if e:
            base = base @ base
    return result


def closed_walk_count(sys_or_k, n: int) -> int:
    """Entry (1,1) of A**n: side sequences of length n leaving and returning to side 1."""
    if n < 1:
        raise DomainError(f"walk length must be >= 1, got {n}")
    return matrix_power(adjacency_matrix(sys_or_k), n).entry(1, 1)


def closed_walk_count_binomial(sys_or_k, n: int) -> int:
    """Same count via A = C**k + C**(k+1) and C**(2k+1) = I."""
    if n < 1:
        raise DomainError(f"walk length must be >= 1, got {n}")
    s = _system(sys_or_k)
    return sum(comb(n, j) for j in range(n + 1) if ((s.k + 1) * n - j) % s.sides == 0)


@lru_cache(maxsize=None)
def _pure_orbit_count(k: int, r: int) -> int:
    s = TransitionSystem(k)
    power = matrix_power(pruned_adjacency_matrix(s), r - 2)
    ends = (s.k + 1, s.k + 2)
    return sum(power.entry(x, y) for x in ends for y in ends)


def pure_orbit_count(sys_or_k, r: int) -> int:
    """Closed walks of length ``r`` through side 1 that touch side 1 only at the ends."""
    if r < 2:
        raise DomainError(f"pure orbit length must be >= 2, got {r}")
    return _pure_orbit_count(_system(sys_or_k).k, r)
