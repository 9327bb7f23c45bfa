import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from inscribed_orbits.errors import DomainError, InadmissibleWordError, ResourceCapError
from inscribed_orbits.oracle import (
    canonical_rotation,
    count_orbits_bruteforce,
    enumerate_closed_words,
    is_primitive,
    list_canonical_orbits,
    validate_word,
)
from inscribed_orbits.transition import closed_walk_count, successors


def test_closed_words_examples():
    assert sorted(enumerate_closed_words(1, 4)) == sorted(
        [(1, 2, 1, 2), (1, 3, 1, 3), (1, 2, 1, 3), (1, 3, 1, 2), (1, 2, 3, 2), (1, 3, 2, 3)]
    )
    assert enumerate_closed_words(2, 3) == []
    assert sorted(enumerate_closed_words(1, 3)) == [(1, 2, 3), (1, 3, 2)]


def test_closed_words_respect_successors():
    for k in (1, 2, 3):
        for n in range(2, 11):
            for w in enumerate_closed_words(k, n):
                assert w[0] == 1
                for i in range(n):
                    assert w[(i + 1) % n] in successors(k, w[i])


def test_closed_word_count_matches_matrix():
    for k in range(1, 6):
        for n in range(2, 21 if k < 3 else 17):
            assert len(enumerate_closed_words(k, n)) == closed_walk_count(k, n), (k, n)


@pytest.mark.parametrize(
    "word, expected",
    [((1, 3, 2, 1, 2, 3), (1, 2, 3, 1, 3, 2)), ((1, 2, 3), (1, 2, 3)), ((2, 3, 1), (1, 2, 3))],
)
def test_canonical_rotation(word, expected):
    assert canonical_rotation(word) == expected


@given(st.lists(st.integers(1, 5), min_size=1, max_size=12), st.integers(0, 50))
def test_canonical_rotation_is_class_invariant(word, shift):
    w = tuple(word)
    s = shift % len(w)
    rotated = w[s:] + w[:s]
    assert canonical_rotation(rotated) == canonical_rotation(w)
    assert canonical_rotation(canonical_rotation(w)) == canonical_rotation(w)


@pytest.mark.parametrize(
    "word, expected",
    [((1, 2, 1, 2), False), ((1, 2, 3, 2), True), ((1, 2, 3, 1, 2, 3), False), ((1,), True)],
)
def test_is_primitive(word, expected):
    assert is_primitive(word) is expected


def test_class_sizes_partition_all_words():
    # each primitive class appears once per occurrence of side 1
    for k in (1, 2, 3):
        for n in range(2, 13):
            words = enumerate_closed_words(k, n)
            classes = {}
            for w in words:
                classes.setdefault(canonical_rotation(w), []).append(w)
            for rep, members in classes.items():
                if is_primitive(rep):
                    assert len(members) == rep.count(1)
            assert sum(len(m) for m in classes.values()) == len(words)


@pytest.mark.parametrize("k, n, expected", [(1, 8, 30), (2, 6, 10), (1, 4, 3), (1, 2, 0)])
def test_bruteforce_counts(k, n, expected):
    assert count_orbits_bruteforce(k, n) == expected


def test_period_four_triangle_classes():
    assert list_canonical_orbits(1, 4) == [(1, 2, 1, 3), (1, 2, 3, 2), (1, 3, 2, 3)]


def test_listing_examples():
    assert list_canonical_orbits(1, 3) == [(1, 2, 3), (1, 3, 2)]
    assert list_canonical_orbits(2, 5) == [(1, 3, 5, 2, 4), (1, 4, 2, 5, 3)]
    six = list_canonical_orbits(1, 6)
    assert canonical_rotation((1, 2, 3, 2, 1, 3)) in six
    assert canonical_rotation((1, 2, 1, 3, 1, 2)) in six


def test_listing_is_sorted_and_canonical():
    words = list_canonical_orbits(2, 10)
    assert words == sorted(words)
    assert all(canonical_rotation(w) == w and is_primitive(w) and len(set(w)) >= 3 for w in words)


def test_bruteforce_propositions():
    for k in range(1, 6):
        m = 2 * k + 1
        assert count_orbits_bruteforce(k, m) == 2
        assert count_orbits_bruteforce(k, 4) == 3
        for t in range(1, k):
            assert count_orbits_bruteforce(k, 2 * t + 1) == 0
        if 2 * k + 3 <= 14:
            assert count_orbits_bruteforce(k, 2 * k + 3) == 4 * k + 2


def test_cap():
    with pytest.raises(ResourceCapError):
        count_orbits_bruteforce(1, 27)
    with pytest.raises(ResourceCapError):
        list_canonical_orbits(1, 12, max_n=10)
    assert count_orbits_bruteforce(1, 12, max_n=12) == 335


def test_validate_word():
    assert validate_word(1, [1, 2, 3]) == (1, 2, 3)
    with pytest.raises(InadmissibleWordError) as info:
        validate_word(1, (1, 2, 2))
    assert info.value.step == (2, 2, 2)
    with pytest.raises(InadmissibleWordError):
        validate_word(2, (1, 2, 3))  # 1 -> 2 is not a perpendicular move in a pentagon
    with pytest.raises(DomainError):
        validate_word(1, (1,))
    with pytest.raises(DomainError):
        validate_word(1, (1, 4))


def test_random_rotations_share_class():
    rng = random.Random(7)
    words = enumerate_closed_words(2, 12)
    for w in rng.sample(words, 50):
        s = rng.randrange(len(w))
        assert canonical_rotation(w[s:] + w[:s]) == canonical_rotation(w)
