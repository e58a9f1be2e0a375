from functools import cmp_to_key
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from slidepoly.combinat import (append_zeros, composition, composition_to_descent_set, compositions,
                                count_weak_compositions, descent_set_to_composition, diagram, flat,
                                format_weak_composition, lex_compare, parse_weak_composition,
                                prepend_zeros, refinements, rev, weak_composition, weak_compositions)

weak = st.lists(st.integers(0, 4), max_size=6).map(tuple)


def test_rev_example():
    assert rev((0, 3, 0, 2)) == (2, 0, 3, 0)
    assert rev(()) == ()


@given(weak)
def test_rev_involution(a):
    assert rev(rev(a)) == a


def test_flat_examples():
    assert flat((0, 0, 0, 1, 0, 2)) == (1, 2)
    assert flat((2, 3)) == (2, 3)
    assert flat((0, 0)) == ()


def test_prepend_zeros_example():
    assert prepend_zeros((1, 0, 2), 3) == (0, 0, 0, 1, 0, 2)


@given(weak, st.integers(0, 5))
def test_zero_padding(a, m):
    assert prepend_zeros(a, 0) == a == append_zeros(a, 0)
    assert flat(prepend_zeros(a, m)) == flat(a)
    assert rev(append_zeros(a, m)) == prepend_zeros(rev(a), m)
    assert len(append_zeros(a, m)) == len(a) + m


def test_append_zeros_example():
    assert append_zeros((2, 3), 2) == (2, 3, 0, 0)


def test_equality_is_length_sensitive():
    assert weak_composition((2, 3)) != weak_composition((2, 3, 0))


def test_validation():
    with pytest.raises(ValueError):
        weak_composition((1, -1))
    with pytest.raises(ValueError):
        composition((1, 0, 2))
    with pytest.raises(ValueError):
        prepend_zeros((1,), -1)


def test_parse_and_format():
    assert parse_weak_composition("0,3,0,2") == (0, 3, 0, 2)
    assert parse_weak_composition(" 1, 2 ") == (1, 2)
    assert parse_weak_composition("") == ()
    assert format_weak_composition((0, 3, 0, 2)) == "0,3,0,2"
    for bad in ("1,-2", "1,x", "1.5", "1,,2"):
        with pytest.raises(ValueError):
            parse_weak_composition(bad)


def test_lex_compare_examples():
    assert lex_compare((0, 3, 0, 2), (1, 2, 0, 2)) < 0
    assert lex_compare((1, 2), (1, 2)) == 0
    with pytest.raises(ValueError):
        lex_compare((1, 2), (1, 2, 0))


def test_lex_sort_matches_pairwise_insertion_sort():
    items = list(weak_compositions(4, 3))

    def older(a, b):  # elementwise comparison written out
        for x, y in zip(a, b):
            if x != y:
                return x < y
        return False

    oracle = []
    for a in reversed(items):
        i = 0
        while i < len(oracle) and older(oracle[i], a):
            i += 1
        oracle.insert(i, a)
    assert sorted(items, key=cmp_to_key(lex_compare)) == oracle


@given(weak.filter(lambda a: len(a) == 4), weak.filter(lambda a: len(a) == 4))
def test_lex_total_order(a, b):
    c = lex_compare(a, b)
    assert c == -lex_compare(b, a)
    assert (c == 0) == (a == b)


def test_descent_set_to_composition_examples():
    assert descent_set_to_composition({2, 5, 7}, 9) == (2, 3, 2, 2)
    assert descent_set_to_composition(set(), 5) == (5,)
    assert descent_set_to_composition({1, 2, 3}, 4) == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        descent_set_to_composition({4}, 4)
    with pytest.raises(ValueError):
        descent_set_to_composition({0}, 4)


@pytest.mark.parametrize("n", range(1, 9))
def test_descent_sets_biject_with_compositions(n):
    seen = set()
    for k in range(n):
        for d in combinations(range(1, n), k):
            alpha = descent_set_to_composition(d, n)
            assert sum(alpha) == n and len(alpha) == k + 1
            assert composition_to_descent_set(alpha) == frozenset(d)
            seen.add(alpha)
    assert seen == set(compositions(n))
    assert len(seen) == 2 ** (n - 1)


def test_weak_compositions_count_and_order():
    items = list(weak_compositions(4, 3))
    assert len(items) == count_weak_compositions(4, 3) == 15
    assert items == sorted(items)
    assert list(weak_compositions(0, 0)) == [()]


def test_refinements():
    assert sorted(refinements((2, 1))) == [(1, 1, 1), (2, 1)]
    assert len(list(refinements((4,)))) == 8


def test_diagram():
    assert diagram((2, 0, 1)) == {(1, 1), (1, 2), (3, 1)}
    assert len(diagram((0, 3, 0, 2))) == 5
