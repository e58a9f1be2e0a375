"""Weak compositions, compositions and the index arithmetic on them.

Weak compositions are plain tuples of nonnegative ints. Rows of a diagram
are numbered from 1 at the bottom, so ``a[i - 1]`` is the length of row i.
"""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Iterator

WeakComposition = tuple[int, ...]
Composition = tuple[int, ...]


def weak_composition(parts: Iterable[int]) -> WeakComposition:
    a = tuple(int(p) for p in parts)
    if any(p < 0 for p in a):
        raise ValueError(f"negative part in weak composition {a}")
    return a


def composition(parts: Iterable[int]) -> Composition:
    alpha = weak_composition(parts)
    if any(p == 0 for p in alpha):
        raise ValueError(f"composition {alpha} has a zero part")
    return alpha


def is_composition(a: WeakComposition) -> bool:
    return all(p > 0 for p in a)


def parse_weak_composition(text: str) -> WeakComposition:
    """Parse ``"0,3,0,2"``; the empty string is the empty composition."""
    text = text.strip()
    if text in ("", "()", "[]"):
        return ()
    parts = []
    for tok in text.strip("()[]").split(","):
        tok = tok.strip()
        if not tok.isdigit():
            raise ValueError(f"not a nonnegative integer: {tok!r}")
        parts.append(int(tok))
    return tuple(parts)


def format_weak_composition(a: WeakComposition) -> str:
    return ",".join(str(p) for p in a)


def rev(a: WeakComposition) -> WeakComposition:
    return tuple(reversed(a))


def flat(a: WeakComposition) -> Composition:
    return tuple(p for p in a if p != 0)


def prepend_zeros(a: WeakComposition, m: int) -> WeakComposition:
    if m < 0:
        raise ValueError("m must be nonnegative")
    return (0,) * m + tuple(a)


def append_zeros(a: WeakComposition, m: int) -> WeakComposition:
    if m < 0:
        raise ValueError("m must be nonnegative")
    return tuple(a) + (0,) * m


def lex_compare(a: WeakComposition, b: WeakComposition) -> int:
    """Return -1, 0 or 1 as ``a`` is lex smaller, equal or larger than ``b``.

    ``a >_lex b`` when ``a_i > b_i`` at the first index where they differ.
    """
    if len(a) != len(b):
        raise ValueError(f"lex_compare needs equal lengths, got {len(a)} and {len(b)}")
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    return 0


def descent_set_to_composition(descents: Iterable[int], n: int) -> Composition:
    ds = sorted(set(descents))
    if any(d < 1 or d > n - 1 for d in ds):
        raise ValueError(f"descent set {ds} not contained in 1..{n - 1}")
    if n == 0:
        return ()
    cuts = [0] + ds + [n]
    return tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))


def composition_to_descent_set(alpha: Composition) -> frozenset[int]:
    partial, out = 0, set()
    for p in alpha[:-1]:
        partial += p
        out.add(partial)
    return frozenset(out)


def weak_compositions(n: int, length: int) -> Iterator[WeakComposition]:
    """All weak compositions of ``n`` with ``length`` parts, in lex order."""
    if length == 0:
        if n == 0:
            yield ()
        return
    if length == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, length - 1):
            yield (first,) + rest


def count_weak_compositions(n: int, length: int) -> int:
    if length == 0:
        return 1 if n == 0 else 0
    return comb(n + length - 1, length - 1)


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` (the empty one when ``n == 0``)."""
    for k in range(n):
        for cut in combinations(range(1, n), k):
            yield descent_set_to_composition(cut, n)
    if n == 0:
        yield ()


def refinements(alpha: Composition) -> Iterator[Composition]:
    """Compositions beta with beta refining alpha (alpha sums consecutive parts of beta)."""
    n = sum(alpha)
    base = composition_to_descent_set(alpha)
    free = [i for i in range(1, n) if i not in base]
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            yield descent_set_to_composition(base | set(extra), n)


def weak_compositions_up_to(max_n: int, max_len: int, min_len: int = 1) -> Iterator[WeakComposition]:
    """Every weak composition with total at most ``max_n`` and length in [min_len, max_len]."""
    for length in range(min_len, max_len + 1):
        for n in range(max_n + 1):
            yield from weak_compositions(n, length)


def diagram(a: WeakComposition) -> frozenset[tuple[int, int]]:
    """Boxes (row, column) of D(a), both 1-indexed, row 1 at the bottom."""
    return frozenset((r, c) for r, length in enumerate(a, start=1) for c in range(1, length + 1))
