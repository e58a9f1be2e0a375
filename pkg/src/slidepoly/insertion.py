"""Weak insertion of standard immaculate fillings and its rapture inverse.

Insertion sends U in SIF(a) to a pair (P, Q): P a standard Young skyline
filling and Q a recording filling (DIRF) of the same shape whose row strip
shape is rev(a). Rapture undoes one insertion step at a time.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import inf
from typing import Optional

from .combinat import WeakComposition, rev, weak_compositions
from .descents import weak_descent_composition
from .fillings import (Cell, FamilyTag, Filling, descent_set, enumerate_fillings, reading_word,
                       require, row_strip_shape, validate)

# (letter, cell it left or None for a fresh letter, cell it entered)
TraceEvent = tuple[int, Optional[Cell], Cell]


@dataclass(frozen=True)
class InsertionPair:
    P: Filling
    Q: Filling

    def to_record(self) -> dict:
        return {"P": [list(r) for r in self.P.rows], "Q": [list(r) for r in self.Q.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))

    @classmethod
    def from_record(cls, rec: dict) -> "InsertionPair":
        return cls(Filling.from_rows(rec["P"]), Filling.from_rows(rec["Q"]))


def format_trace(events: list[TraceEvent]) -> list[str]:
    def cell(c):
        return "-" if c is None else f"({c[0]},{c[1]})"
    return [f"({v}, {cell(src)}, {cell(dst)})" for v, src, dst in events]


def _value(rows: list[list[int]], r: int, c: int) -> float:
    row = rows[r - 1]
    return row[c - 1] if c <= len(row) else inf


def _insert_letter(rows: list[list[int]], v: int, home_row: dict[int, int],
                   trace: list[TraceEvent] | None) -> Cell:
    """Insert v into ``rows`` in place and return the cell where insertion stops."""
    maxcol = max((len(r) for r in rows), default=0)
    src: Cell | None = None
    for c in range(maxcol + 1, 1, -1):
        for r in range(len(rows), 0, -1):
            row = rows[r - 1]
            if len(row) < c - 1:
                continue  # no left neighbour
            if not row[c - 2] <= v < _value(rows, r, c):
                continue
            if trace is not None:
                trace.append((v, src, (r, c)))
            if c == len(row) + 1:
                row.append(v)
                return (r, c)
            row[c - 1], v = v, row[c - 1]
            src = (r, c)
    r = home_row[v]
    if rows[r - 1]:
        raise ValueError(f"leftmost cell of row {r} is already occupied")
    rows[r - 1].append(v)
    if trace is not None:
        trace.append((v, src, (r, 1)))
    return (r, 1)


def weak_insert(u: Filling, trace: list[TraceEvent] | None = None) -> InsertionPair:
    """Insert the reading word of the SIF ``u``; bump events go to ``trace`` if given."""
    require(FamilyTag.SIF, u)
    home_row = {v: r for v, (r, _) in u.positions().items()}
    p_rows: list[list[int]] = [[] for _ in range(u.length)]
    q_rows: list[list[int]] = [[] for _ in range(u.length)]
    for k, v in enumerate(reading_word(FamilyTag.SIF, u), start=1):
        r, c = _insert_letter(p_rows, v, home_row, trace)
        q_row = q_rows[r - 1]
        if len(q_row) != c - 1:
            raise AssertionError("recording filling out of step with insertion")
        q_row.append(k)
    return InsertionPair(Filling.from_rows(p_rows), Filling.from_rows(q_rows))


def _rapture_step(p_rows: list[list[int]], cell: Cell) -> int:
    """Remove the entry at ``cell`` and reverse-bump; returns the ejected letter."""
    r0, c0 = cell
    row = p_rows[r0 - 1]
    if c0 != len(row):
        raise ValueError(f"cell {cell} is not at the end of its row")
    v = row.pop()
    maxcol = max((len(r) for r in p_rows), default=0)
    for c in range(max(c0, 2), maxcol + 1):
        rows_here = range(r0 + 1, len(p_rows) + 1) if c == c0 else range(1, len(p_rows) + 1)
        for r in rows_here:
            here = p_rows[r - 1]
            if c > len(here):
                continue
            if here[c - 1] < v <= _value(p_rows, r, c + 1):
                here[c - 1], v = v, here[c - 1]
    return v


def rapture_inverse(pair: InsertionPair) -> Filling:
    """Recover the SIF whose weak insertion is ``pair``."""
    p, q = pair.P, pair.Q
    require(FamilyTag.YSF, p)
    require(FamilyTag.DIRF, q)
    if p.shape != q.shape:
        raise ValueError("P and Q have different shapes")
    first_col = {p.get(r, 1): r for r in range(1, p.length + 1) if p.shape[r - 1]}
    p_rows = [list(r) for r in p.rows]
    q_pos = q.positions()
    word: list[int] = []
    for k in range(q.size, 0, -1):
        word.append(_rapture_step(p_rows, q_pos[k]))
    word.reverse()

    u_rows: list[list[int]] = [[] for _ in range(p.length)]
    current: list[int] | None = None
    for m in word:
        if m in first_col:
            current = u_rows[first_col[m] - 1]
            if current:
                raise ValueError(f"row {first_col[m]} is started twice")
        elif current is None:
            raise ValueError(f"word {word} does not start with a leftmost-column entry")
        current.append(m)
    u = Filling.from_rows(u_rows)
    if not validate(FamilyTag.SIF, u):
        raise ValueError(f"pair is not in the image of weak insertion (got {u.rows})")
    if weak_insert(u) != pair:
        raise ValueError("pair is not in the image of weak insertion")
    return u


def insertion_targets(a) -> set[InsertionPair]:
    """Y(a): every (P, Q) with P a YSF, Q a DIRF of the same shape, row strip shape rev(a)."""
    a = tuple(a)
    out: set[InsertionPair] = set()
    for b in weak_compositions(sum(a), len(a)):
        qs = [q for q in enumerate_fillings(FamilyTag.DIRF, b) if row_strip_shape(q) == rev(a)]
        if not qs:
            continue
        for p in enumerate_fillings(FamilyTag.YSF, b):
            out.update(InsertionPair(p, q) for q in qs)
    return out


@dataclass
class InsertionReport:
    a: WeakComposition
    sources: int = 0
    targets: int = 0
    failures: list[tuple[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_insertion_bijection(a) -> InsertionReport:
    a = tuple(a)
    report = InsertionReport(a)
    targets = insertion_targets(a)
    report.targets = len(targets)
    images: dict[InsertionPair, Filling] = {}
    for u in enumerate_fillings(FamilyTag.SIF, a):
        report.sources += 1
        pair = weak_insert(u)
        if pair in images:
            report.failures.append(("not injective", (images[pair].rows, u.rows)))
        images[pair] = u
        if pair not in targets:
            report.failures.append(("image outside Y(a)", u.rows))
        if pair.P.first_column() != u.first_column():
            report.failures.append(("leftmost column changed", u.rows))
        if weak_descent_composition(FamilyTag.SIF, u) != weak_descent_composition(FamilyTag.YSF, pair.P):
            report.failures.append(("wdes not preserved", u.rows))
        if descent_set(FamilyTag.SIF, u) != descent_set(FamilyTag.YSF, pair.P):
            report.failures.append(("descent set not preserved", u.rows))
        try:
            back = rapture_inverse(pair)
        except ValueError as exc:
            report.failures.append(("rapture failed", (u.rows, str(exc))))
        else:
            if back != u:
                report.failures.append(("round trip", (u.rows, back.rows)))
    missed = targets - set(images)
    if missed:
        report.failures.append(("not surjective", len(missed)))
    return report
