"""Sparse polynomials with exact integer coefficients in a fixed number of variables."""
from __future__ import annotations

import json
from collections import Counter
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping

from .combinat import WeakComposition, flat


class Polynomial:
    """Immutable map from exponent vectors to nonzero ints.

    Every exponent vector has length ``num_vars``. Terms are kept in lex order
    of exponents so iteration and printing are deterministic.
    """

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[WeakComposition, int] | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        cleaned: dict[WeakComposition, int] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} does not have {num_vars} parts")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if coeff:
                cleaned[exp] = int(coeff)
        self.num_vars = num_vars
        self._terms = dict(sorted(cleaned.items()))
        self._hash = None

    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls(num_vars)

    @classmethod
    def monomial(cls, exponent: Iterable[int], coeff: int = 1) -> "Polynomial":
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: coeff})

    @classmethod
    def from_exponents(cls, num_vars: int, exponents: Iterable[WeakComposition]) -> "Polynomial":
        """Sum of x^e over a multiset of exponent vectors."""
        return cls(num_vars, Counter(tuple(e) for e in exponents))

    def coefficient(self, exponent: Iterable[int]) -> int:
        return self._terms.get(tuple(exponent), 0)

    def items(self) -> Iterator[tuple[WeakComposition, int]]:
        return iter(self._terms.items())

    def support(self) -> list[WeakComposition]:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __contains__(self, exponent) -> bool:
        return tuple(exponent) in self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def _check_arity(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected a Polynomial, got {type(other).__name__}")
        if other.num_vars != self.num_vars:
            raise ValueError(f"arity mismatch: {self.num_vars} vs {other.num_vars} variables")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_arity(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            out[exp] = out.get(exp, 0) + c
        return Polynomial(self.num_vars, out)

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_arity(other)
        return self + (-other)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.num_vars, {e: c * v for e, v in self._terms.items()})

    def lead(self, key: Callable[[WeakComposition], object] | None = None) -> tuple[WeakComposition, int]:
        """The term whose exponent is minimal under ``key`` (plain lex by default)."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = min(self._terms, key=key) if key else next(iter(self._terms))
        return exp, self._terms[exp]

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*x^[{','.join(map(str, e))}]" for e, c in self._terms.items())

    def to_records(self) -> list[dict]:
        return [{"exponent": list(e), "coeff": c} for e, c in self._terms.items()]

    def to_jsonl(self) -> str:
        return "\n".join(json.dumps(r, separators=(",", ":")) for r in self.to_records())

    @classmethod
    def from_records(cls, num_vars: int, records: Iterable[Mapping]) -> "Polynomial":
        out: dict[WeakComposition, int] = {}
        for rec in records:
            exp = tuple(rec["exponent"])
            out[exp] = out.get(exp, 0) + int(rec["coeff"])
        return cls(num_vars, out)

    def __repr__(self) -> str:
        return f"Polynomial({self.num_vars}, {self.to_text()})"


def poly_sum(polys: Iterable[Polynomial], num_vars: int) -> Polynomial:
    acc: dict[WeakComposition, int] = {}
    for p in polys:
        if p.num_vars != num_vars:
            raise ValueError(f"arity mismatch: {p.num_vars} vs {num_vars} variables")
        for e, c in p.items():
            acc[e] = acc.get(e, 0) + c
    return Polynomial(num_vars, acc)


def reverse_variables(p: Polynomial) -> Polynomial:
    """Substitute x_i -> x_{m+1-i}."""
    return Polynomial(p.num_vars, {e[::-1]: c for e, c in p.items()})


def truncate_vars(p: Polynomial, m: int) -> Polynomial:
    """Set x_{m+1}, x_{m+2}, ... to zero and drop them."""
    if m > p.num_vars:
        raise ValueError(f"cannot truncate {p.num_vars} variables to {m}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return Polynomial(m, {e[:m]: c for e, c in p.items() if not any(e[m:])})


def placements(alpha: tuple[int, ...], m: int) -> Iterator[WeakComposition]:
    """Every exponent vector of length m whose nonzero parts read alpha."""
    for idx in combinations(range(m), len(alpha)):
        e = [0] * m
        for i, part in zip(idx, alpha):
            e[i] = part
        yield tuple(e)


def is_quasisymmetric(p: Polynomial) -> bool:
    checked: set[tuple[int, ...]] = set()
    for e, c in p.items():
        alpha = flat(e)
        if alpha in checked:
            continue
        checked.add(alpha)
        if any(p.coefficient(other) != c for other in placements(alpha, p.num_vars)):
            return False
    return True
