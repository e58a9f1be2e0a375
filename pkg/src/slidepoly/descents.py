"""Run decompositions and weak descent compositions.

Reverse families (SRIF, RSF) anchor runs from the largest entry downward and
fail when an anchor drops to row 0 or below. Young families (SIF, YSF) anchor
from the smallest entry upward and fail when an anchor passes the top row.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .combinat import WeakComposition, format_weak_composition
from .fillings import RULES, Cell, FamilyTag, Filling, is_descent, require, sorted_cells


class Empty(Enum):
    EMPTY = "EMPTY"

    def __repr__(self) -> str:
        return "EMPTY"

    __str__ = __repr__


EMPTY = Empty.EMPTY
WeakDescentResult = WeakComposition | Empty

REVERSE_TAGS = (FamilyTag.SRIF, FamilyTag.RSF)
YOUNG_TAGS = (FamilyTag.SIF, FamilyTag.YSF)
SEMISTANDARD_TAGS = (FamilyTag.SSRIF, FamilyTag.RSSF)


@dataclass(frozen=True)
class RunDecomposition:
    """Runs stored smallest-run-first; each run lists its cells by increasing label."""
    runs: tuple[tuple[Cell, ...], ...]
    anchors: tuple[int, ...] | None  # None when some anchor falls outside 1..length

    def lengths(self) -> list[int]:
        return [len(run) for run in self.runs]


def _runs(cells: Sequence[Cell], rule: str) -> list[list[Cell]]:
    """Split cells (indexed by label 1..n) at every descent."""
    runs: list[list[Cell]] = []
    for i, cell in enumerate(cells):
        if i == 0 or is_descent(rule, cells[i - 1], cell):
            runs.append([cell])
        else:
            runs[-1].append(cell)
    return runs


def _anchor(runs: list[list[Cell]], length: int, descending: bool) -> tuple[int, ...] | None:
    k = len(runs)
    if k == 0:
        return ()
    p = [0] * k
    if descending:
        p[k - 1] = runs[k - 1][-1][0]  # row of the largest label
        for j in range(k - 2, -1, -1):
            p[j] = min(p[j + 1] - 1, min(r for r, _ in runs[j]))
        if p[0] <= 0:
            return None
    else:
        p[0] = runs[0][0][0]  # row of label 1
        for j in range(1, k):
            p[j] = max(p[j - 1] + 1, max(r for r, _ in runs[j]))
        if p[-1] > length:
            return None
    return tuple(p)


def _decompose(cells: Sequence[Cell], rule: str, length: int, descending: bool) -> RunDecomposition:
    runs = _runs(cells, rule)
    return RunDecomposition(tuple(tuple(run) for run in runs), _anchor(runs, length, descending))


def _to_result(dec: RunDecomposition, length: int) -> WeakDescentResult:
    if dec.anchors is None:
        return EMPTY
    out = [0] * length
    for p, run in zip(dec.anchors, dec.runs):
        out[p - 1] = len(run)
    return tuple(out)


def run_decomposition(tag: FamilyTag, s: Filling) -> RunDecomposition:
    if tag not in REVERSE_TAGS + YOUNG_TAGS:
        raise ValueError(f"no weak descent composition for {tag.value}")
    require(tag, s)
    pos = s.positions()
    cells = [pos[i] for i in range(1, s.size + 1)]
    return _decompose(cells, RULES[tag].descent, s.length, tag in REVERSE_TAGS)


def weak_descent_composition(tag: FamilyTag, s: Filling) -> WeakDescentResult:
    """wdes of a standard filling; EMPTY when the anchors leave the diagram."""
    return _to_result(run_decomposition(tag, s), s.length)


def semistandard_run_decomposition(tag: FamilyTag, t: Filling) -> RunDecomposition:
    """Runs of the entries of ``t`` ordered by value, ties broken by reading order."""
    if tag not in SEMISTANDARD_TAGS:
        raise ValueError(f"no semistandard weak descent composition for {tag.value}")
    require(tag, t)
    counterpart = FamilyTag.SRIF if tag is FamilyTag.SSRIF else FamilyTag.RSF
    return _decompose(sorted_cells(tag, t), RULES[counterpart].descent, t.length, True)


def weak_descent_composition_semistandard(tag: FamilyTag, t: Filling) -> WeakDescentResult:
    return _to_result(semistandard_run_decomposition(tag, t), t.length)


def format_result(result: WeakDescentResult) -> str:
    return "EMPTY" if result is EMPTY else format_weak_composition(result)
