"""Brute-force orbit counting over cyclic side words.

Used as ground truth for the closed-form count: walks are enumerated
directly, identified up to rotation, and filtered for primitivity and for
visiting at least three distinct sides.
"""
from __future__ import annotations

from typing import Iterator, Sequence

from .errors import DomainError, InadmissibleWordError, ResourceCapError
from .transition import TransitionSystem, successors

DEFAULT_MAX_N = 26

SideWord = tuple[int, ...]

__all__ = [
    "DEFAULT_MAX_N",
    "SideWord",
    "validate_word",
    "iter_closed_words",
    "enumerate_closed_words",
    "canonical_rotation",
    "is_primitive",
    "count_orbits_bruteforce",
    "list_canonical_orbits",
]


def validate_word(k: int, word: Sequence[int]) -> SideWord:
    """Return ``word`` as a tuple, raising if any cyclic step is not a perpendicular move."""
    sys = TransitionSystem(k)
    word = tuple(int(v) for v in word)
    if len(word) < 2:
        raise DomainError(f"a side word needs at least two labels, got {word}")
    for v in word:
        sys.check_label(v)
    for i, v in enumerate(word):
        nxt = word[(i + 1) % len(word)]
        if nxt not in successors(sys, v):
            raise InadmissibleWordError(
                f"step {v} -> {nxt} (position {i + 1}) is not admissible; "
                f"side {v} only reaches {successors(sys, v)}",
                step=(i + 1, v, nxt),
            )
    return word


def _check_cap(n: int, max_n: int) -> None:
    if n > max_n:
        raise ResourceCapError(
            f"period {n} exceeds the enumeration cap {max_n} (2^n walks); raise max_n to override"
        )


def iter_closed_words(k: int, n: int) -> Iterator[SideWord]:
    """Depth-first walks of length ``n`` from side 1 whose wrap step returns to side 1."""
    if n < 2:
        raise DomainError(f"period must be >= 2, got {n}")
    sys = TransitionSystem(k)
    succ = {i: successors(sys, i) for i in range(1, sys.sides + 1)}
    closing = {i for i in succ if 1 in succ[i]}
    word = [1] * n

    def dfs(pos):
        if pos == n:
            if word[-1] in closing:
                yield tuple(word)
            return
        for nxt in succ[word[pos - 1]]:
            word[pos] = nxt
            yield from dfs(pos + 1)

    yield from dfs(1)


def enumerate_closed_words(k: int, n: int, max_n: int = DEFAULT_MAX_N) -> list[SideWord]:
    _check_cap(n, max_n)
    return list(iter_closed_words(k, n))


def canonical_rotation(word: Sequence[int]) -> SideWord:
    """Lexicographically smallest rotation."""
    w = tuple(word)
    return min(w[i:] + w[:i] for i in range(len(w))) if w else w


def is_primitive(word: Sequence[int]) -> bool:
    """False iff ``word`` is a shorter word repeated more than once."""
    w = tuple(word)
    n = len(w)
    return not any(n % d == 0 and w == w[:d] * (n // d) for d in range(1, n))


def _is_orbit_representative(w: SideWord) -> bool:
    return len(set(w)) >= 3 and is_primitive(w) and w == canonical_rotation(w)


def list_canonical_orbits(k: int, n: int, max_n: int = DEFAULT_MAX_N) -> list[SideWord]:
    """Sorted canonical side words of all n-periodic orbits through side 1."""
    _check_cap(n, max_n)
    # Side 1 is the smallest label, so every canonical rotation starts at 1
    # and appears among the walks from side 1.
    return sorted(w for w in iter_closed_words(k, n) if _is_orbit_representative(w))


def count_orbits_bruteforce(k: int, n: int, max_n: int = DEFAULT_MAX_N) -> int:
    return len(list_canonical_orbits(k, n, max_n))
