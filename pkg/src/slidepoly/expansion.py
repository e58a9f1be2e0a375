"""Expansion formulas between bases, and a generic triangular change of basis.

The closed formulas count standard fillings by weak descent composition or
recording fillings by shape. ``generic_change_of_basis`` computes the same
expansions by peeling off leading terms, and is what the formulas are checked
against.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .bases import BasisTag, basis_polynomial, lead_key, leading_exponent
from .combinat import (WeakComposition, count_weak_compositions, flat, format_weak_composition,
                       prepend_zeros, rev, weak_compositions)
from .descents import (EMPTY, run_decomposition, semistandard_run_decomposition, weak_descent_composition,
                       weak_descent_composition_semistandard)
from .fillings import (FamilyTag, Filling, descent_composition, enumerate_fillings,
                       remove_empty_rows, row_strip_shape, standardize, validate)
from .polynomial import Polynomial, poly_sum, truncate_vars


class TriangularityError(RuntimeError):
    pass


@dataclass
class ExpansionResult:
    target: BasisTag
    coeffs: dict[WeakComposition, int]
    num_vars: int
    source: tuple[str, WeakComposition] | None = None

    def __post_init__(self):
        self.coeffs = {b: c for b, c in sorted(self.coeffs.items()) if c}

    def reconstruct(self) -> Polynomial:
        m = self.num_vars if self.target.quasisymmetric else None
        return poly_sum((basis_polynomial(self.target, b, m).scale(c) for b, c in self.coeffs.items()),
                        self.num_vars)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def header(self) -> str:
        src = "polynomial" if self.source is None else f"{self.source[0]} {format_weak_composition(self.source[1])}"
        return f"# {src} -> {self.target.value} in {self.num_vars} variables"

    def to_text(self) -> str:
        lines = [self.header()]
        lines += [f"{c}\t{format_weak_composition(b)}" for b, c in self.coeffs.items()]
        return "\n".join(lines)


def _count_wdes(tag: FamilyTag, a: WeakComposition) -> Counter:
    counts: Counter = Counter()
    for s in enumerate_fillings(tag, a):
        w = weak_descent_composition(tag, s)
        if w is not EMPTY:
            counts[w] += 1
    return counts


def expand_drev_to_fslide(a) -> ExpansionResult:
    a = tuple(a)
    return ExpansionResult(BasisTag.FSLIDE, _count_wdes(FamilyTag.SRIF, a), len(a), ("DREV_SLIDE", a))


def expand_qk_to_fslide(a) -> ExpansionResult:
    a = tuple(a)
    return ExpansionResult(BasisTag.FSLIDE, _count_wdes(FamilyTag.RSF, a), len(a), ("QKEY", a))


def expand_dis_to_yfslide(a) -> ExpansionResult:
    a = tuple(a)
    return ExpansionResult(BasisTag.YFSLIDE, _count_wdes(FamilyTag.SIF, a), len(a), ("DIS_SLIDE", a))


def expand_yqk_to_yfslide(a) -> ExpansionResult:
    a = tuple(a)
    return ExpansionResult(BasisTag.YFSLIDE, _count_wdes(FamilyTag.YSF, a), len(a), ("YQKEY", a))


@lru_cache(maxsize=None)
def dirf_table(n: int, length: int) -> dict[WeakComposition, Counter]:
    """Row strip shape -> Counter of shapes, over every DIRF of size n with ``length`` rows."""
    table: dict[WeakComposition, Counter] = {}
    for b in weak_compositions(n, length):
        for q in enumerate_fillings(FamilyTag.DIRF, b):
            table.setdefault(row_strip_shape(q), Counter())[b] += 1
    return table


def dirf_count(a, b) -> int:
    """c_{a,b}: the number of DIRFs of shape b with row strip shape rev(a)."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b) or sum(a) != sum(b):
        return 0
    return dirf_table(sum(b), len(b)).get(rev(a), Counter())[b]


def expand_dis_to_yqk(a) -> ExpansionResult:
    a = tuple(a)
    shapes = dirf_table(sum(a), len(a)).get(rev(a), Counter())
    return ExpansionResult(BasisTag.YQKEY, dict(shapes), len(a), ("DIS_SLIDE", a))


def expand_drev_to_qk(a) -> ExpansionResult:
    """Coefficient of QK_b is c_{rev(a), rev(b)}."""
    a = tuple(a)
    shapes = dirf_table(sum(a), len(a)).get(a, Counter())
    return ExpansionResult(BasisTag.QKEY, {rev(b): c for b, c in shapes.items()}, len(a),
                           ("DREV_SLIDE", a))


def expand_rdi_to_qs(alpha, m: int) -> ExpansionResult:
    """Coefficient of QS_beta is c_{rev(alpha), rev(beta)}, counted on DIRTs."""
    alpha = tuple(alpha)
    if any(p == 0 for p in alpha):
        raise ValueError(f"{alpha} is not a composition")
    if m < len(alpha):
        raise ValueError(f"need at least {len(alpha)} variables, got {m}")
    coeffs: Counter = Counter()
    n = sum(alpha)
    for k in range(1, n + 1) if n else ():
        shapes = dirf_table(n, k).get(alpha, Counter())
        for b, c in shapes.items():
            if 0 not in b and len(b) <= m:
                coeffs[rev(b)] += c
    if n == 0:
        coeffs[()] = 1
    return ExpansionResult(BasisTag.QS, dict(coeffs), m, ("REV_DUAL_IMM_QS", alpha))


def generic_change_of_basis(target: BasisTag, p: Polynomial, source=None) -> ExpansionResult:
    """Expand ``p`` in ``target`` by repeatedly removing the leading term.

    Quasisymmetric targets are taken in ``p.num_vars`` variables; ``p`` must
    then be quasisymmetric, or a leading exponent will fail to be justified.
    """
    key = lead_key(target)
    m = p.num_vars
    cap = sum(count_weak_compositions(d, m) for d in {sum(e) for e in p})
    coeffs: dict[WeakComposition, int] = {}
    rest = p
    steps = 0
    while not rest.is_zero():
        steps += 1
        if steps > cap:
            raise TriangularityError(f"no termination after {cap} steps expanding into {target.value}")
        exp, c = rest.lead(key)
        if target.quasisymmetric:
            index = flat(exp)
            if leading_exponent(target, index, m) != exp:
                raise TriangularityError(f"leading exponent {exp} is not justified for {target.value}")
            element = basis_polynomial(target, index, m)
        else:
            index = exp
            element = basis_polynomial(target, index)
        lead_exp, lead_coeff = element.lead(key)
        if lead_exp != exp or lead_coeff != 1:
            raise TriangularityError(f"{target.value} at {index} does not lead with x^{list(exp)}")
        coeffs[index] = coeffs.get(index, 0) + c
        rest = rest - element.scale(c)
    return ExpansionResult(target, coeffs, m, source)


def expand_basis(source: BasisTag, index, target: BasisTag, m: int | None = None) -> ExpansionResult:
    """Generic expansion of one basis element into another basis."""
    index = tuple(index)
    p = basis_polynomial(source, index, m)
    return generic_change_of_basis(target, p, (source.value, index))


# ---------------------------------------------------------------------------
# stable limits

@dataclass
class StableLimitReport:
    a: WeakComposition
    m: int
    drev_equal: bool
    qk_equal: bool
    first_difference: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.drev_equal and self.qk_equal


def _first_difference(p: Polynomial, q: Polynomial):
    for e in sorted(set(p) | set(q)):
        if p.coefficient(e) != q.coefficient(e):
            return e, p.coefficient(e), q.coefficient(e)
    return None


def verify_stable_limit(a, m: int) -> StableLimitReport:
    """truncate(D^rev_{0^m a}, m) = D^rev_{flat a}(x_1..x_m), and likewise QK against QS."""
    a = tuple(a)
    if m < 1:
        raise ValueError("m must be at least 1")
    shifted = prepend_zeros(a, m)
    alpha = flat(a)
    lhs = truncate_vars(basis_polynomial(BasisTag.DREV_SLIDE, shifted), m)
    rhs = basis_polynomial(BasisTag.REV_DUAL_IMM_QS, alpha, m)
    qk_lhs = truncate_vars(basis_polynomial(BasisTag.QKEY, shifted), m)
    qk_rhs = basis_polynomial(BasisTag.QS, alpha, m)
    diff = _first_difference(lhs, rhs) or _first_difference(qk_lhs, qk_rhs)
    return StableLimitReport(a, m, lhs == rhs, qk_lhs == qk_rhs, diff)


def stable_descent_multisets(a, m: int) -> tuple[Counter, Counter]:
    """flat(wdes) over SRIF(0^m a) next to descent compositions over SRIT(flat a).

    Fillings whose wdes is EMPTY are left out of the first multiset.
    """
    a = tuple(a)
    left: Counter = Counter()
    for s in enumerate_fillings(FamilyTag.SRIF, prepend_zeros(a, m)):
        w = weak_descent_composition(FamilyTag.SRIF, s)
        if w is not EMPTY:
            left[flat(w)] += 1
    right = Counter(descent_composition(FamilyTag.SRIT, s)
                    for s in enumerate_fillings(FamilyTag.SRIT, flat(a)))
    return left, right


def collapse_descents_agree(a) -> bool:
    """Removing empty rows sends SRIF(a) onto SRIT(flat a) and keeps descent compositions."""
    a = tuple(a)
    image = Counter()
    for s in enumerate_fillings(FamilyTag.SRIF, a):
        t = remove_empty_rows(s)
        if not validate(FamilyTag.SRIT, t):
            return False
        if descent_composition(FamilyTag.SRIF, s) != descent_composition(FamilyTag.SRIT, t):
            return False
        w = weak_descent_composition(FamilyTag.SRIF, s)
        if w is not EMPTY and flat(w) != descent_composition(FamilyTag.SRIF, s):
            return False
        image[t] += 1
    return set(image) == set(enumerate_fillings(FamilyTag.SRIT, flat(a))) and all(
        c == 1 for c in image.values())


# ---------------------------------------------------------------------------
# the class bijection behind the fundamental slide expansions

def psi(tag: FamilyTag, t: Filling) -> Filling:
    """Place the runs of ``t`` into the rows given by their anchors.

    ``tag`` is SSRIF or RSSF; the result is an FSSF of shape wdes(t).
    """
    dec = semistandard_run_decomposition(tag, t)
    if dec.anchors is None:
        raise ValueError("weak descent composition is EMPTY")
    rows: list[tuple[int, ...]] = [()] * t.length
    for p, run in zip(dec.anchors, dec.runs):
        rows[p - 1] = tuple(sorted((t.get(*cell) for cell in run), reverse=True))
    return Filling(tuple(rows))


def psi_inverse(tag: FamilyTag, s: Filling, k: Filling) -> Filling:
    """Refill the runs of the standard filling ``s`` with the rows of the FSSF ``k``."""
    std_tag = FamilyTag.SRIF if tag is FamilyTag.SSRIF else FamilyTag.RSF
    dec = run_decomposition(std_tag, s)
    if dec.anchors is None:
        raise ValueError("weak descent composition is EMPTY")
    values: dict[tuple[int, int], int] = {}
    for p, run in zip(dec.anchors, dec.runs):
        row = k.rows[p - 1]
        if len(row) != len(run):
            raise ValueError("FSSF shape does not match the weak descent composition")
        # largest label of the run takes the leftmost (largest) entry of the row
        for cell, v in zip(reversed(run), row):
            values[cell] = v
    return Filling(tuple(tuple(values[(r, c)] for c in range(1, len(row) + 1))
                         for r, row in enumerate(s.rows, start=1)))


def psi_class_bijection(tag: FamilyTag, s: Filling) -> dict[Filling, Filling]:
    """Psi_S on the class {T : std(T) = S}; raises when wdes(S) is EMPTY."""
    std_tag = FamilyTag.SRIF if tag is FamilyTag.SSRIF else FamilyTag.RSF
    if weak_descent_composition(std_tag, s) is EMPTY:
        raise ValueError("weak descent composition is EMPTY, so the class is empty")
    return {t: psi(tag, t) for t in enumerate_fillings(tag, s.shape) if standardize(tag, t) == s}


@dataclass
class PositivityReport:
    source: tuple[str, WeakComposition]
    target: BasisTag
    expansion: ExpansionResult
    negative: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.negative


def verify_positivity(source: BasisTag, index, target: BasisTag, m: int | None = None) -> PositivityReport:
    result = expand_basis(source, index, target, m)
    negative = {b: c for b, c in result.coeffs.items() if c < 0}
    return PositivityReport((source.value, tuple(index)), target, result, negative)
