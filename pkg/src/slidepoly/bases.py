"""Basis elements as explicit polynomials.

Polynomial bases are indexed by weak compositions and live in as many
variables as the index has parts. Quasisymmetric bases are indexed by
compositions and are materialized in an explicit number of variables m.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .combinat import WeakComposition, composition, lex_compare, refinements, rev, weak_compositions
from .fillings import FamilyTag, enumerate_fillings, weight
from .polynomial import Polynomial, placements, poly_sum, reverse_variables


class BasisTag(Enum):
    DREV_SLIDE = "DREV_SLIDE"  # reverse dual immaculate slide polynomials
    DIS_SLIDE = "DIS_SLIDE"  # (Young) dual immaculate slide polynomials
    QKEY = "QKEY"  # quasi-key polynomials
    YQKEY = "YQKEY"  # Young quasi-key polynomials
    FSLIDE = "FSLIDE"  # fundamental slide polynomials
    YFSLIDE = "YFSLIDE"  # Young fundamental slide polynomials
    ATOM = "ATOM"  # Demazure atoms
    MONO_QS = "MONO_QS"  # monomial quasisymmetric
    FUND_QS = "FUND_QS"  # fundamental quasisymmetric
    DUAL_IMM_QS = "DUAL_IMM_QS"  # dual immaculate
    REV_DUAL_IMM_QS = "REV_DUAL_IMM_QS"  # reverse dual immaculate
    YQS = "YQS"  # Young quasisymmetric Schur
    QS = "QS"  # quasisymmetric Schur

    @property
    def quasisymmetric(self) -> bool:
        return self in QUASISYMMETRIC

    @property
    def young(self) -> bool:
        """Young bases are triangular with respect to lex order on reversed exponents."""
        return self in YOUNG


QUASISYMMETRIC = frozenset({BasisTag.MONO_QS, BasisTag.FUND_QS, BasisTag.DUAL_IMM_QS,
                            BasisTag.REV_DUAL_IMM_QS, BasisTag.YQS, BasisTag.QS})
YOUNG = frozenset({BasisTag.DIS_SLIDE, BasisTag.YQKEY, BasisTag.YFSLIDE,
                   BasisTag.DUAL_IMM_QS, BasisTag.YQS})

# polynomial bases generated directly by a family of fillings
GENERATING_FAMILY = {
    BasisTag.DREV_SLIDE: FamilyTag.SSRIF,
    BasisTag.DIS_SLIDE: FamilyTag.SSIF,
    BasisTag.QKEY: FamilyTag.RSSF,
    BasisTag.YQKEY: FamilyTag.YSSF,
    BasisTag.FSLIDE: FamilyTag.FSSF,
    BasisTag.ATOM: FamilyTag.ATOM,
    BasisTag.DUAL_IMM_QS: FamilyTag.SSIT,
    BasisTag.REV_DUAL_IMM_QS: FamilyTag.SSRIT,
    BasisTag.YQS: FamilyTag.YCT,
}


def parse_basis(name: str) -> BasisTag:
    try:
        return BasisTag(name.upper())
    except ValueError:
        raise ValueError(f"unknown basis {name!r}") from None


def basis_polynomial(tag: BasisTag, index, m: int | None = None) -> Polynomial:
    """The basis element ``tag`` at ``index``; quasisymmetric tags use m variables.

    ``m`` defaults to the number of parts of the index.
    """
    index = tuple(index)
    if any(p < 0 for p in index):
        raise ValueError(f"negative part in index {index}")
    if tag.quasisymmetric:
        composition(index)  # rejects zero parts
        m = len(index) if m is None else m
        if m < 0:
            raise ValueError("m must be nonnegative")
        return _quasisymmetric(tag, index, m)
    if m is not None and m != len(index):
        raise ValueError(f"{tag.value} lives in {len(index)} variables, not {m}")
    return _polynomial(tag, index)


@lru_cache(maxsize=None)
def _polynomial(tag: BasisTag, a: WeakComposition) -> Polynomial:
    ell = len(a)
    if tag is BasisTag.YFSLIDE:
        return reverse_variables(_polynomial(BasisTag.FSLIDE, rev(a)))
    family = GENERATING_FAMILY[tag]
    return Polynomial.from_exponents(ell, (weight(f, ell) for f in enumerate_fillings(family, a, ell)))


@lru_cache(maxsize=None)
def _quasisymmetric(tag: BasisTag, alpha: tuple[int, ...], m: int) -> Polynomial:
    if tag is BasisTag.MONO_QS:
        return Polynomial.from_exponents(m, placements(alpha, m))
    if tag is BasisTag.FUND_QS:
        return poly_sum((_quasisymmetric(BasisTag.MONO_QS, beta, m) for beta in refinements(alpha)), m)
    if tag is BasisTag.QS:
        return reverse_variables(_quasisymmetric(BasisTag.YQS, rev(alpha), m))
    family = GENERATING_FAMILY[tag]
    return Polynomial.from_exponents(m, (weight(f, m) for f in enumerate_fillings(family, alpha, m)))


def lead_key(tag: BasisTag):
    """Sort key whose minimum picks out the leading exponent of a ``tag`` element."""
    if tag.young:
        return lambda e: e[::-1]
    return None


def leading_exponent(tag: BasisTag, index, m: int | None = None) -> WeakComposition:
    """Exponent expected to lead the basis element: the index itself, padded for quasisymmetric tags."""
    index = tuple(index)
    if not tag.quasisymmetric:
        return index
    m = len(index) if m is None else m
    pad = (0,) * (m - len(index))
    return index + pad if tag.young else pad + index


@dataclass
class BasisReport:
    tag: BasisTag
    n: int
    length: int
    checked: int = 0
    failures: list[tuple[WeakComposition, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_basis_property(tag: BasisTag, n: int, length: int) -> BasisReport:
    """Check x^a is the lex-least monomial of the element at a, with coefficient 1.

    Unitriangularity in lex order over all a of size n with the given length
    means these elements form a basis of the degree-n polynomials.
    """
    if tag.quasisymmetric:
        raise ValueError("triangularity is checked for polynomial bases only")
    report = BasisReport(tag, n, length)
    key = lead_key(tag)
    for a in weak_compositions(n, length):
        p = basis_polynomial(tag, a)
        report.checked += 1
        if p.is_zero():
            report.failures.append((a, "zero polynomial"))
            continue
        exp, coeff = p.lead(key)
        if exp != a or coeff != 1:
            report.failures.append((a, f"lead term {coeff}*x^{list(exp)}"))
        elif key is None and any(lex_compare(e, a) < 0 for e in p):
            report.failures.append((a, "a smaller monomial exists"))
    return report
