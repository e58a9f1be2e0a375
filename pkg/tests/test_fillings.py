import pytest

from slidepoly.combinat import compositions, descent_set_to_composition, rev, weak_compositions_up_to
from slidepoly.fillings import (RULES, FamilyTag, Filling, descent_composition, descent_set,
                                enumerate_fillings, flip, parse_family, reading_word, row_strip_shape,
                                standard_counterpart, standardize, validate, weight)

from oracles import brute_fillings

F = FamilyTag
T_EX = Filling.from_rows([[], [2, 1], [], [3, 3, 2, 1], [5, 4, 2]])
S_EX = Filling.from_rows([[], [5, 2], [], [7, 6, 4, 1], [9, 8, 3]])
DIRF_EX = Filling.from_rows([[4], [], [1, 2, 3, 5], []])


def test_worked_example_validates():
    assert validate(F.SSRIF, T_EX)
    assert validate(F.SRIF, S_EX)
    assert not validate(F.SRIF, T_EX)
    assert validate(F.DIRF, DIRF_EX)
    assert row_strip_shape(DIRF_EX) == (0, 3, 0, 2)


@pytest.mark.parametrize("tag", list(FamilyTag))
def test_empty_filling_validates_for_every_tag(tag):
    empty = Filling.from_rows([[], [], []])
    assert validate(tag, empty)
    assert enumerate_fillings(tag, (0, 0, 0)) == [empty]


@pytest.mark.parametrize("tag, shape, max_entry, count", [
    (F.SSRIF, (0, 3, 0, 2), 4, 30),
    (F.SRIF, (0, 3, 0, 2), None, 4),
    (F.RSSF, (0, 3, 0, 2), None, 19),
    (F.RSF, (0, 3, 0, 2), None, 3),
    (F.FSSF, (0, 2, 1), None, 4),
    (F.SSIT, (1, 2, 2), 4, 13),
    (F.SIT, (2, 3), None, 4),
    (F.SRIT, (3, 2), None, 4),
    (F.SIF, (2, 0, 3, 0), None, 4),
    (F.YSF, (2, 0, 3, 0), None, 3),
])
def test_worked_counts(tag, shape, max_entry, count):
    assert len(enumerate_fillings(tag, shape, max_entry)) == count


def test_reading_words():
    assert reading_word(F.SSRIF, T_EX) == [2, 4, 5, 1, 2, 3, 3, 1, 2]
    sif = Filling.from_rows([[1, 2], [], [3, 4, 5], []])
    assert reading_word(F.SIF, sif) == [3, 4, 5, 1, 2]
    assert reading_word(F.SRIF, Filling.from_rows([[7]])) == [7]
    with pytest.raises(ValueError):
        reading_word(F.DIRF, DIRF_EX)


def test_sif_words_of_shape_2030():
    words = sorted("".join(map(str, reading_word(F.SIF, u))) for u in enumerate_fillings(F.SIF, (2, 0, 3, 0)))
    assert words == ["23415", "23514", "24513", "34512"]


def test_weight():
    t = Filling.from_rows([[], [2, 2, 2], [], [4, 4]])
    assert validate(F.SSRIF, t)
    assert weight(t, 4) == (0, 3, 0, 2)
    assert weight(S_EX) == (1,) * 9
    with pytest.raises(ValueError):
        weight(t, 3)


def test_standardize_example():
    assert standardize(F.SSRIF, T_EX) == S_EX
    small = Filling.from_rows([[1], [2]])  # standard and within the row bounds
    assert validate(F.SSRIF, small) and standardize(F.SSRIF, small) == small
    with pytest.raises(ValueError):
        standardize(F.SSRIF, Filling.from_rows([[1, 2]]))
    with pytest.raises(ValueError):
        standardize(F.SRIF, S_EX)


@pytest.mark.parametrize("tag", [F.SSRIF, F.RSSF, F.SSIF, F.YSSF])
def test_standardization_lands_in_counterpart(tag):
    std = standard_counterpart(tag)
    for a in weak_compositions_up_to(4, 3):
        targets = set(enumerate_fillings(std, a))
        for t in enumerate_fillings(tag, a, 3):
            s = standardize(tag, t)
            assert s in targets
            if validate(tag, s):
                assert standardize(tag, s) == s


def test_descent_sets():
    assert descent_set(F.SRIF, S_EX) == {2, 5, 7}
    assert descent_composition(F.SRIF, S_EX) == (2, 3, 2, 2)
    rsf = {frozenset(descent_set(F.RSF, s)) for s in enumerate_fillings(F.RSF, (0, 3, 0, 2))}
    assert rsf == {frozenset({3}), frozenset({2, 4}), frozenset({1, 4})}
    srit = Filling.from_rows([[3, 2, 1], [5, 4]])
    assert descent_composition(F.SRIT, srit) == (3, 2)
    with pytest.raises(ValueError):
        descent_set(F.SRIF, T_EX)


def test_row_strip_shapes():
    assert row_strip_shape(Filling.from_rows([[1, 2, 3, 4]])) == (4,)
    for b in [(2, 0, 3, 0), (1, 0, 4, 0)]:
        for q in enumerate_fillings(F.DIRF, b):
            assert len(row_strip_shape(q)) == 4
    with pytest.raises(ValueError):
        row_strip_shape(Filling.from_rows([[2, 1]]))


def test_tableau_families_need_composition_shapes():
    assert not validate(F.SSIT, Filling.from_rows([[1], [], [2]]))
    assert enumerate_fillings(F.SIT, (1, 0, 1)) == []


SMALL = [a for a in weak_compositions_up_to(4, 3) if sum(a) <= 4]


@pytest.mark.parametrize("tag", list(FamilyTag))
def test_enumeration_matches_brute_force(tag):
    for a in SMALL:
        if RULES[tag].tableau and 0 in a:
            continue
        for m in ([None] if RULES[tag].standard else [None, 3]):
            assert set(enumerate_fillings(tag, a, m)) == brute_fillings(tag, a, m), (tag, a, m)


def test_enumeration_is_duplicate_free_and_ordered():
    fs = enumerate_fillings(F.SSRIF, (0, 3, 0, 2), 4)
    assert len(set(fs)) == len(fs)
    words = [reading_word(F.SSRIF, f) for f in fs]
    assert words == sorted(words)


def test_row_index_bounds():
    for a in weak_compositions_up_to(4, 3):
        for tag in (F.SSRIF, F.RSSF, F.FSSF, F.ATOM):
            for f in enumerate_fillings(tag, a):
                assert all(v <= r for r, _, v in f.cells())
        for tag in (F.SSIF, F.YSSF):
            for f in enumerate_fillings(tag, a, 4):
                assert all(v >= r for r, _, v in f.cells())


def test_atoms_are_rssf_with_pinned_first_column():
    for a in weak_compositions_up_to(5, 3):
        atoms = set(enumerate_fillings(F.ATOM, a))
        pinned = {f for f in enumerate_fillings(F.RSSF, a) if all(v == r for r, v in f.first_column())}
        assert atoms == pinned


@pytest.mark.parametrize("n", range(1, 7))
def test_theta_reverses_descent_compositions(n):
    for alpha in compositions(n):
        sit = enumerate_fillings(F.SIT, alpha)
        image = [flip(s, n) for s in enumerate_fillings(F.SRIT, rev(alpha))]
        assert sorted(image, key=lambda f: f.rows) == sorted(sit, key=lambda f: f.rows)
        for s in enumerate_fillings(F.SRIT, rev(alpha)):
            assert descent_composition(F.SIT, flip(s, n)) == rev(descent_composition(F.SRIT, s))


def test_record_round_trip():
    rec = T_EX.to_record(F.SSRIF)
    assert rec == {"family": "SSRIF", "shape": [0, 2, 0, 4, 3], "rows": [[], [2, 1], [], [3, 3, 2, 1], [5, 4, 2]]}
    assert Filling.from_record(rec) == T_EX
    assert T_EX.to_json(F.SSRIF) == '{"family":"SSRIF","shape":[0,2,0,4,3],"rows":[[],[2,1],[],[3,3,2,1],[5,4,2]]}'
    with pytest.raises(ValueError):
        Filling.from_record({"shape": [1], "rows": [[1, 2]]})


def test_parse_family():
    assert parse_family("srif") is F.SRIF
    with pytest.raises(ValueError):
        parse_family("nope")


def test_descent_composition_helper_consistent():
    for s in enumerate_fillings(F.SRIF, (1, 2, 2)):
        assert descent_composition(F.SRIF, s) == descent_set_to_composition(descent_set(F.SRIF, s), 5)
