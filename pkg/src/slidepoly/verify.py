"""Exhaustive checks of the expansion, stability and insertion identities over bounded ranges."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .bases import BasisTag, basis_polynomial, verify_basis_property
from .combinat import compositions, flat, format_weak_composition, rev, weak_compositions_up_to
from .expansion import (ExpansionResult, expand_dis_to_yfslide, expand_dis_to_yqk, expand_drev_to_fslide,
                        expand_drev_to_qk, expand_qk_to_fslide, expand_rdi_to_qs, expand_yqk_to_yfslide,
                        generic_change_of_basis, stable_descent_multisets, verify_positivity,
                        verify_stable_limit)
from .fillings import FamilyTag, descent_composition, enumerate_fillings
from .insertion import verify_insertion_bijection
from .polynomial import is_quasisymmetric

Failure = tuple[str, str, str]  # (index, expected, actual)


@dataclass
class VerifyReport:
    identity: str
    max_n: int
    max_len: int
    max_vars: int
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "FAIL" if self.failures else "PASS"

    def to_record(self) -> dict:
        return {
            "identity": self.identity,
            "status": self.status,
            "range": {"max_n": self.max_n, "max_len": self.max_len, "max_vars": self.max_vars},
            "checked": self.checked,
            "failures": [{"index": i, "expected": e, "actual": a} for i, e, a in self.failures],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))

    def pretty(self) -> str:
        lines = [f"{self.identity}: {self.status}",
                 f"  range      n <= {self.max_n}, length <= {self.max_len}, variables <= {self.max_vars}",
                 f"  checked    {self.checked}"]
        for i, e, a in self.failures[:20]:
            lines.append(f"  failure at {i}: expected {e}, got {a}")
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more failures")
        return "\n".join(lines)


def _fmt(x) -> str:
    if isinstance(x, tuple) and all(isinstance(p, int) for p in x):
        return "(" + format_weak_composition(x) + ")"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{_fmt(k)}: {v}" for k, v in sorted(x.items())) + "}"
    return str(x)


def _check_expansion(result: ExpansionResult, source: BasisTag, index, m=None) -> list[tuple[str, str]]:
    """Formula result against the source polynomial and against the generic engine."""
    out = []
    p = basis_polynomial(source, index, m)
    if result.reconstruct() != p:
        out.append((p.to_text(), result.reconstruct().to_text()))
    oracle = generic_change_of_basis(result.target, p).coeffs
    if oracle != result.coeffs:
        out.append((_fmt(oracle), _fmt(result.coeffs)))
    if not result.is_nonnegative():
        out.append(("nonnegative coefficients", _fmt(result.coeffs)))
    return out


def _drev_fslide(a):
    return _check_expansion(expand_drev_to_fslide(a), BasisTag.DREV_SLIDE, a)


def _qk_fslide(a):
    return _check_expansion(expand_qk_to_fslide(a), BasisTag.QKEY, a)


def _dis_yfslide(a):
    result = expand_dis_to_yfslide(a)
    out = _check_expansion(result, BasisTag.DIS_SLIDE, a)
    conjugate = {rev(b): c for b, c in expand_drev_to_fslide(rev(a)).coeffs.items()}
    if conjugate != result.coeffs:
        out.append((_fmt(conjugate), _fmt(result.coeffs)))
    return out


def _yqk_yfslide(a):
    return _check_expansion(expand_yqk_to_yfslide(a), BasisTag.YQKEY, a)


def _dis_yqk(a):
    return _check_expansion(expand_dis_to_yqk(a), BasisTag.DIS_SLIDE, a)


def _rdistoqk(a):
    return _check_expansion(expand_drev_to_qk(a), BasisTag.DREV_SLIDE, a)


def _rditoqs(case):
    alpha, m = case
    return _check_expansion(expand_rdi_to_qs(alpha, m), BasisTag.REV_DUAL_IMM_QS, alpha, m)


def _stable_limit(case):
    a, m = case
    rep = verify_stable_limit(a, m)
    if rep.ok:
        return []
    return [("equal", f"first difference {rep.first_difference}")]


def _stabilization(case):
    a, m = case
    left, right = stable_descent_multisets(a, m)
    out = []
    if left != right:
        out.append((_fmt(dict(right)), _fmt(dict(left))))
    # the limit formula itself: fundamental expansion over SRIT(flat a)
    alpha = flat(a)
    if m >= len(alpha):
        p = basis_polynomial(BasisTag.REV_DUAL_IMM_QS, alpha, m)
        oracle = generic_change_of_basis(BasisTag.FUND_QS, p).coeffs
        visible = {b: c for b, c in right.items() if len(b) <= m}  # F_b vanishes in fewer variables
        if oracle != visible:
            out.append((_fmt(visible), _fmt(oracle)))
    return out


def _atom_positivity(case):
    kind, index, m = case
    if kind == "poly":
        rep = verify_positivity(BasisTag.DREV_SLIDE, index, BasisTag.ATOM)
    else:
        rep = verify_positivity(BasisTag.REV_DUAL_IMM_QS, index, BasisTag.ATOM, m)
    return [] if rep.ok else [("nonnegative", _fmt(rep.negative))]


def _triangularity(case):
    tag, n, length = case
    rep = verify_basis_property(BasisTag(tag), n, length)
    return [("unitriangular", f"{_fmt(a)} {msg}") for a, msg in rep.failures]


def _insertion(a):
    rep = verify_insertion_bijection(a)
    return [("bijection", f"{kind}: {detail}") for kind, detail in rep.failures]


def _quasisymmetry(a):
    out = []
    nz = [i for i, p in enumerate(a) if p]
    reverse_ok = all(a[i] for i in range(nz[0], len(a))) if nz else True
    young_ok = all(a[i] for i in range(nz[-1] + 1)) if nz else True
    for tag, qs_tag, predicted in ((BasisTag.DREV_SLIDE, BasisTag.REV_DUAL_IMM_QS, reverse_ok),
                                   (BasisTag.DIS_SLIDE, BasisTag.DUAL_IMM_QS, young_ok)):
        p = basis_polynomial(tag, a)
        actual = is_quasisymmetric(p)
        if actual != predicted:
            out.append((f"{tag.value} quasisymmetric={predicted}", f"quasisymmetric={actual}"))
        elif predicted and p != basis_polynomial(qs_tag, flat(a), len(a)):
            out.append((f"{qs_tag.value} {_fmt(flat(a))}", p.to_text()))
    return out


POLYNOMIAL_BASES = (BasisTag.DREV_SLIDE, BasisTag.DIS_SLIDE, BasisTag.QKEY, BasisTag.YQKEY,
                    BasisTag.FSLIDE, BasisTag.YFSLIDE, BasisTag.ATOM)


def _shapes(n, ell, m):
    return list(weak_compositions_up_to(n, ell))


def _shapes_with_m(n, ell, m):
    return [(a, k) for a in weak_compositions_up_to(n, ell) for k in range(1, m + 1)]


def _comps_with_m(n, ell, m):
    return [(alpha, k) for total in range(n + 1) for alpha in compositions(total)
            if len(alpha) <= ell for k in range(max(len(alpha), 1), m + 1)]


def _positivity_cases(n, ell, m):
    cases = [("poly", a, None) for a in weak_compositions_up_to(n, ell)]
    cases += [("qs", alpha, k) for alpha, k in _comps_with_m(n, ell, m)]
    return cases


def _triangularity_cases(n, ell, m):
    return [(tag.value, total, length) for tag in POLYNOMIAL_BASES
            for length in range(1, ell + 1) for total in range(n + 1)]


# name -> (instances(max_n, max_len, max_vars), check(instance) -> [(expected, actual)])
IDENTITIES: dict[str, tuple[Callable, Callable]] = {
    "thm-1.1": (_shapes, _drev_fslide),
    "thm-1.2": (_shapes_with_m, _stable_limit),
    "thm-1.3": (_shapes, _dis_yqk),
    "qk-fslide": (_shapes, _qk_fslide),
    "dis-yfslide": (_shapes, _dis_yfslide),
    "yqk-yfslide": (_shapes, _yqk_yfslide),
    "rdistoqk": (_shapes, _rdistoqk),
    "rditoqs": (_comps_with_m, _rditoqs),
    "atom-positivity": (_positivity_cases, _atom_positivity),
    "basis-triangularity": (_triangularity_cases, _triangularity),
    "insertion-bijection": (_shapes, _insertion),
    "quasisymmetry-criterion": (_shapes, _quasisymmetry),
    "stabilization-formula": (_shapes_with_m, _stabilization),
}


def _run_one(name: str, instance):
    return IDENTITIES[name][1](instance)


def _index_text(instance) -> str:
    if all(isinstance(p, int) for p in instance):
        return _fmt(instance)
    return ", ".join("-" if x is None else _fmt(x) for x in instance)


def run_identity(name: str, max_n: int = 6, max_len: int = 4, max_vars: int | None = None,
                 jobs: int = 1) -> VerifyReport:
    if name not in IDENTITIES:
        raise ValueError(f"unknown identity {name!r}; choose from {', '.join(IDENTITIES)}")
    if max_n < 0 or max_len < 1:
        raise ValueError("need max_n >= 0 and max_len >= 1")
    max_vars = max_len if max_vars is None else max_vars
    if max_vars < 1:
        raise ValueError("max_vars must be at least 1")
    instances, _ = IDENTITIES[name]
    cases = instances(max_n, max_len, max_vars)
    report = VerifyReport(name, max_n, max_len, max_vars)
    results: Iterable
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, [name] * len(cases), cases, chunksize=8))
    else:
        results = (_run_one(name, c) for c in cases)
    for case, fails in zip(cases, results):
        report.checked += 1
        report.failures.extend((_index_text(case), e, a) for e, a in fails)
    return report
