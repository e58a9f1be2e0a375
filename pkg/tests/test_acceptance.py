"""Acceptance gate. Each ``test_criterion_NN`` maps to one numbered criterion; the
conftest hook prints a PASS/FAIL line per criterion at the end of the run."""
import random
import time

import pytest

from slidepoly.bases import BasisTag, basis_polynomial, verify_basis_property
from slidepoly.combinat import compositions, rev, weak_compositions_up_to
from slidepoly.descents import EMPTY, weak_descent_composition, weak_descent_composition_semistandard
from slidepoly.expansion import (dirf_count, expand_dis_to_yfslide, expand_dis_to_yqk, expand_drev_to_fslide,
                                 expand_drev_to_qk, expand_qk_to_fslide, expand_yqk_to_yfslide,
                                 generic_change_of_basis, verify_positivity, verify_stable_limit)
from slidepoly.fillings import (RULES, FamilyTag, Filling, _enumerate_cached, enumerate_fillings, standardize,
                                validate)
from slidepoly.insertion import InsertionPair, rapture_inverse, verify_insertion_bijection, weak_insert
from slidepoly.polynomial import Polynomial, reverse_variables
from slidepoly.verify import run_identity

from oracles import brute_fillings, brute_srifs, srif_wdes

B = BasisTag
F = FamilyTag


def poly(num_vars, text):
    """'2x1121 x1112'-style term list -> Polynomial."""
    terms = {}
    for tok in text.split():
        coeff, _, exp = tok.partition("x")
        terms[tuple(map(int, exp))] = int(coeff or 1)
    return Polynomial(num_vars, terms)


def assert_pass(name, **kw):
    report = run_identity(name, **kw)
    assert report.status == "PASS", report.pretty()
    assert report.checked > 0


# 1. enumeration counts

FIGURE_COUNTS = [
    (F.SSRIF, (0, 3, 0, 2), 4, 30),
    (F.SRIF, (0, 3, 0, 2), None, 4),
    (F.RSSF, (0, 3, 0, 2), None, 19),
    (F.RSF, (0, 3, 0, 2), None, 3),
    (F.FSSF, (0, 2, 1), None, 4),
    (F.SSIT, (1, 2, 2), 4, 13),
    (F.SIT, (2, 3), None, 4),
    (F.SRIT, (3, 2), None, 4),
]


def test_criterion_01_enumeration_counts():
    _enumerate_cached.cache_clear()
    start = time.perf_counter()
    counts = [len(enumerate_fillings(tag, shape, max_entry)) for tag, shape, max_entry, _ in FIGURE_COUNTS]
    elapsed = time.perf_counter() - start
    assert counts == [c for *_, c in FIGURE_COUNTS]
    assert elapsed < 1.0


# 2. worked polynomials, compared through their canonical text form

def test_criterion_02_worked_polynomials():
    assert basis_polynomial(B.FSLIDE, (0, 2, 1)).to_text() == \
        "1*x^[0,2,1] + 1*x^[1,1,1] + 1*x^[2,0,1] + 1*x^[2,1,0]"
    qk = poly(4, "x0302 x1202 x2102 x3002 x0311 x1211 x2111 x3011 x3101 x1301 "
                 "x2201 x0320 x1220 x2120 x3020 x3110 x1310 x2210 x3200")
    assert len(qk) == 19
    assert basis_polynomial(B.QKEY, (0, 3, 0, 2)).to_text() == qk.to_text()
    di = poly(4, "x1220 x1211 x1202 x1130 2x1121 2x1112 x1103 x1022 x1013 x0122 x0113")
    got = basis_polynomial(B.DUAL_IMM_QS, (1, 2, 2), 4)
    assert got.to_text() == di.to_text()
    assert got.coefficient((1, 1, 2, 1)) == got.coefficient((1, 1, 1, 2)) == 2
    dis = poly(3, "x201 x111 x102 x021 x012")
    assert basis_polynomial(B.DIS_SLIDE, (2, 0, 1)).to_text() == dis.to_text()


# 3-4. slide expansions: formula, reconstruction and generic oracle agree

def test_criterion_03_reverse_slide_expansion():
    assert_pass("thm-1.1", max_n=6, max_len=4)
    assert expand_drev_to_fslide((0, 3, 0, 2)).coeffs == {
        (0, 3, 0, 2): 1, (0, 4, 0, 1): 1, (1, 3, 0, 1): 1, (2, 2, 0, 1): 1}


@pytest.mark.parametrize("name", ["qk-fslide", "dis-yfslide", "yqk-yfslide"])
def test_criterion_04_slide_expansions(name):
    assert_pass(name, max_n=6, max_len=4)


# 5. recording-filling coefficients

def test_criterion_05_recording_expansions():
    assert_pass("thm-1.3", max_n=6, max_len=4)
    assert_pass("rdistoqk", max_n=6, max_len=4)
    r = expand_dis_to_yqk((2, 0, 3, 0))
    assert r.coeffs == {(2, 0, 3, 0): 1, (1, 0, 4, 0): 1}
    assert r.reconstruct() == basis_polynomial(B.YQKEY, (2, 0, 3, 0)) + basis_polynomial(B.YQKEY, (1, 0, 4, 0))
    assert r.reconstruct() == basis_polynomial(B.DIS_SLIDE, (2, 0, 3, 0))
    # the single recording filling of shape (1,0,4,0)
    dirf = Filling.from_rows([[4], [], [1, 2, 3, 5], []])
    assert validate(F.DIRF, dirf)
    assert dirf_count((2, 0, 3, 0), (1, 0, 4, 0)) == 1
    assert expand_drev_to_qk((0, 3, 0, 2)).coeffs == {(0, 3, 0, 2): 1, (0, 4, 0, 1): 1}


# 6. stable limits

def test_criterion_06_stable_limits():
    assert_pass("thm-1.2", max_n=5, max_len=3, max_vars=4)
    assert_pass("stabilization-formula", max_n=5, max_len=3, max_vars=4)
    rep = verify_stable_limit((1, 0, 2), 4)
    assert rep.drev_equal and rep.qk_equal


# 7. weak insertion

def test_criterion_07_insertion_bijection():
    assert_pass("insertion-bijection", max_n=6, max_len=4)
    u = Filling.from_rows([[1, 3], [], [2, 4, 5], []])
    pair = weak_insert(u)
    assert pair == InsertionPair(Filling.from_rows([[1, 4], [], [2, 3, 5], []]),
                                 Filling.from_rows([[4, 5], [], [1, 2, 3], []]))
    assert rapture_inverse(pair) == u
    assert weak_descent_composition(F.SIF, u) == weak_descent_composition(F.YSF, pair.P)
    rep = verify_insertion_bijection((2, 0, 3, 0))
    assert rep.ok and rep.sources == rep.targets == 4


# 8. atom positivity

def test_criterion_08_atom_positivity():
    for a in weak_compositions_up_to(6, 4):
        assert verify_positivity(B.DREV_SLIDE, a, B.ATOM).ok, a
    for n in range(1, 6):
        for alpha in compositions(n):
            for m in range(len(alpha), 6):
                assert verify_positivity(B.REV_DUAL_IMM_QS, alpha, B.ATOM, m).ok, (alpha, m)


# 9. quasisymmetry criterion and a multiplicity instance

FSLIDE_222_IN_DREV_123 = 2  # frozen from the brute-force count below


def test_criterion_09_quasisymmetry_and_multiplicity():
    assert_pass("quasisymmetry-criterion", max_n=6, max_len=4)
    oracle = sum(1 for s in brute_srifs((1, 2, 3)) if srif_wdes(s) == (2, 2, 2))
    assert oracle == FSLIDE_222_IN_DREV_123
    formula = expand_drev_to_fslide((1, 2, 3)).coeffs[(2, 2, 2)]
    generic = generic_change_of_basis(B.FSLIDE, basis_polynomial(B.DREV_SLIDE, (1, 2, 3))).coeffs[(2, 2, 2)]
    assert formula == generic == FSLIDE_222_IN_DREV_123 >= 2


# 10. property suites

def _random_shapes(rng, tableau, k=5):
    pool = [a for a in weak_compositions_up_to(5, 4) if sum(a) > 0]
    if tableau:
        pool = [a for a in pool if all(a)]
    return rng.sample(pool, k)


@pytest.mark.parametrize("tag", list(FamilyTag), ids=lambda t: t.value)
def test_criterion_10_brute_force_enumeration(tag):
    rng = random.Random(f"criterion-10-{tag.value}")
    for shape in _random_shapes(rng, RULES[tag].tableau):
        assert set(enumerate_fillings(tag, shape)) == brute_fillings(tag, shape), shape


@pytest.mark.parametrize("tag", [F.SSRIF, F.RSSF])
def test_criterion_10_standardization_preserves_wdes(tag):
    std = FamilyTag(RULES[tag].counterpart)
    for a in weak_compositions_up_to(5, 4):
        lifted = set()
        for t in enumerate_fillings(tag, a):
            s = standardize(tag, t)
            lifted.add(s)
            assert weak_descent_composition_semistandard(tag, t) == weak_descent_composition(std, s)
        for s in enumerate_fillings(std, a):
            assert (weak_descent_composition(std, s) is EMPTY) == (s not in lifted)


@pytest.mark.parametrize("tag", [F.SSRIF, F.RSSF, F.SSIF, F.YSSF])
def test_criterion_10_standardization_lands_in_standard_family(tag):
    std = FamilyTag(RULES[tag].counterpart)
    for a in weak_compositions_up_to(5, 4):
        for t in enumerate_fillings(tag, a):
            assert validate(std, standardize(tag, t))


def test_criterion_10_theta_duality():
    for a in weak_compositions_up_to(5, 4):
        for young, reverse in ((expand_dis_to_yfslide, expand_drev_to_fslide),
                               (expand_yqk_to_yfslide, expand_qk_to_fslide),
                               (expand_dis_to_yqk, expand_drev_to_qk)):
            mirrored = {rev(b): c for b, c in reverse(rev(a)).coeffs.items()}
            assert young(a).coeffs == mirrored, a
        for y, r in ((B.DIS_SLIDE, B.DREV_SLIDE), (B.YQKEY, B.QKEY), (B.YFSLIDE, B.FSLIDE)):
            assert basis_polynomial(y, a) == reverse_variables(basis_polynomial(r, rev(a)))


@pytest.mark.parametrize("tag", [B.DREV_SLIDE, B.DIS_SLIDE, B.QKEY, B.YQKEY], ids=lambda t: t.value)
def test_criterion_10_triangularity(tag):
    for n in range(6):
        for ell in range(1, 5):
            rep = verify_basis_property(tag, n, ell)
            assert rep.ok, (n, ell, rep.failures[:3])
