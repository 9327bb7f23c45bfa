"""Independent brute-force oracles. None of these call into the package's fast paths."""
from __future__ import annotations

from math import gcd


def brute_totient(m):
    return sum(1 for i in range(1, m + 1) if gcd(i, m) == 1)


def multiset_words(beta):
    """All distinct words with ``beta[i]`` copies of letter ``i``."""
    counts = list(beta)
    total = sum(counts)
    word = []

    def rec():
        if len(word) == total:
            yield tuple(word)
            return
        for letter, c in enumerate(counts):
            if c:
                counts[letter] -= 1
                word.append(letter)
                yield from rec()
                word.pop()
                counts[letter] += 1

    yield from rec()


def brute_necklaces(beta):
    """Rotation classes counted by orbit size: a word of period p has p rotations."""
    beta = [b for b in beta if b]
    by_period = {}
    for w in multiset_words(beta):
        text = "".join(chr(65 + c) for c in w)
        period = (text + text).find(text, 1)
        by_period[period] = by_period.get(period, 0) + 1
    total = 0
    for period, count in by_period.items():
        assert count % period == 0
        total += count // period
    return total


def succ(k, i):
    m = 2 * k + 1
    return ((i + k - 1) % m + 1, (i + k) % m + 1)


def dfs_closed_walks(k, n):
    """Walks v1=1, v2, ..., vn with each step a successor and vn -> 1 closing the loop."""
    out = []

    def rec(w):
        if len(w) == n:
            if 1 in succ(k, w[-1]):
                out.append(tuple(w))
            return
        for nxt in succ(k, w[-1]):
            rec(w + [nxt])

    rec([1])
    return out


def dfs_pure_orbits(k, r):
    """Closed walks of length r from side 1 that avoid side 1 in between."""
    return sum(1 for w in dfs_closed_walks(k, r) if 1 not in w[1:])


def brute_orbit_classes(k, n):
    """Rotation classes of primitive closed walks using at least three sides."""
    classes = set()
    for w in dfs_closed_walks(k, n):
        if len(set(w)) < 3:
            continue
        rots = {w[i:] + w[:i] for i in range(n)}
        if len(rots) < n:  # a nontrivial rotation fixes w, so it is a repetition
            continue
        classes.add(min(rots))
    return classes


def bisect_fixed_point(f, lo=0.0, hi=1.0, tol=1e-15, max_iter=200):
    """Root of f(t) - t on [lo, hi] by bisection; requires a sign change."""
    g_lo = f(lo) - lo
    g_hi = f(hi) - hi
    assert g_lo * g_hi <= 0, "no sign change on the bracket"
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        g_mid = f(mid) - mid
        if g_mid == 0 or hi - lo < tol:
            return mid
        if (g_mid > 0) == (g_lo > 0):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)] for i in range(n)]


def mat_pow_naive(a, e):
    n = len(a)
    out = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(e):
        out = mat_mul(out, a)
    return out
