"""Fillings of weak composition diagrams and the seventeen families built on them.

A filling stores its rows bottom to top; ``rows[r - 1]`` is row r read left to
right. Every family shares this representation and differs only in the rules
looked up from its ``FamilyTag``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .combinat import WeakComposition, descent_set_to_composition

Cell = tuple[int, int]  # (row, column), both 1-indexed, row 1 at the bottom
INF = float("inf")


@dataclass(frozen=True)
class Filling:
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Filling":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @property
    def shape(self) -> WeakComposition:
        return tuple(len(row) for row in self.rows)

    @property
    def length(self) -> int:
        return len(self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def get(self, r: int, c: int, default=None):
        if 1 <= r <= len(self.rows) and 1 <= c <= len(self.rows[r - 1]):
            return self.rows[r - 1][c - 1]
        return default

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """(row, column, entry) in row-major order from the bottom."""
        for r, row in enumerate(self.rows, start=1):
            for c, v in enumerate(row, start=1):
                yield r, c, v

    def entries(self) -> list[int]:
        return [v for row in self.rows for v in row]

    def positions(self) -> dict[int, Cell]:
        """Entry -> cell; only meaningful when entries are distinct."""
        return {v: (r, c) for r, c, v in self.cells()}

    def first_column(self) -> list[tuple[int, int]]:
        """(row, entry) for each nonempty row, bottom to top."""
        return [(r, row[0]) for r, row in enumerate(self.rows, start=1) if row]

    def to_record(self, tag: "FamilyTag | None" = None) -> dict:
        rec = {}
        if tag is not None:
            rec["family"] = tag.value
        rec["shape"] = list(self.shape)
        rec["rows"] = [list(row) for row in self.rows]
        return rec

    def to_json(self, tag: "FamilyTag | None" = None) -> str:
        return json.dumps(self.to_record(tag), separators=(",", ":"))

    @classmethod
    def from_record(cls, rec: dict) -> "Filling":
        f = cls.from_rows(rec["rows"])
        if "shape" in rec and tuple(rec["shape"]) != f.shape:
            raise ValueError(f"record shape {rec['shape']} does not match its rows")
        return f

    def pretty(self) -> str:
        """French-notation picture, top row first; empty rows drawn as '.'."""
        lines = []
        for row in reversed(self.rows):
            lines.append(" ".join(str(v) for v in row) if row else ".")
        return "\n".join(lines)


class FamilyTag(Enum):
    SSRIT = "SSRIT"
    SRIT = "SRIT"
    SSIT = "SSIT"
    SIT = "SIT"
    YCT = "YCT"
    SYCT = "SYCT"
    SSRIF = "SSRIF"
    SRIF = "SRIF"
    SSIF = "SSIF"
    SIF = "SIF"
    RSSF = "RSSF"
    RSF = "RSF"
    YSSF = "YSSF"
    YSF = "YSF"
    FSSF = "FSSF"
    ATOM = "ATOM"
    DIRF = "DIRF"


class TripleKind(Enum):
    REVERSE = "reverse"  # y above x, z left of x; missing x reads 0
    YOUNG = "young"  # y below x, z left of x; missing x reads infinity
    RECORDING = "recording"  # y above x, z right of x; missing z reads infinity


# Reading orders
ROWS_RL = "rows right-to-left, top to bottom"
ROWS_LR = "rows left-to-right, top to bottom"
COLS_UP = "columns bottom-to-top, rightmost first"
COLS_DOWN = "columns top-to-bottom, rightmost first"

# Descent rules
HIGHER_ROW = "i+1 in a strictly higher row"
WEAKLY_RIGHT = "i+1 weakly right of i"
WEAKLY_LEFT = "i+1 weakly left of i"


@dataclass(frozen=True)
class FamilyRules:
    standard: bool
    rows_increase: bool
    first_column_increases_up: bool = True
    columns_distinct: bool = False
    row_bound: str | None = None  # "le": entries of row i are <= i, "ge": >= i
    triple: TripleKind | None = None
    higher_rows_larger: bool = False
    first_column_is_row_index: bool = False
    dirf_strips: bool = False
    tableau: bool = False  # composition shapes only
    reading: str | None = None
    descent: str | None = None
    counterpart: str | None = None  # standard tag a semistandard one standardizes to
    ties_later_smaller: bool = False


T = FamilyTag
RULES: dict[FamilyTag, FamilyRules] = {
    T.SSRIT: FamilyRules(False, False, tableau=True, reading=ROWS_RL),
    T.SRIT: FamilyRules(True, False, tableau=True, reading=ROWS_RL, descent=HIGHER_ROW),
    T.SSIT: FamilyRules(False, True, tableau=True, reading=ROWS_LR),
    T.SIT: FamilyRules(True, True, tableau=True, reading=ROWS_LR, descent=HIGHER_ROW),
    T.YCT: FamilyRules(False, True, triple=TripleKind.YOUNG, tableau=True, reading=COLS_DOWN),
    T.SYCT: FamilyRules(True, True, triple=TripleKind.YOUNG, tableau=True, reading=COLS_DOWN,
                        descent=WEAKLY_LEFT),
    T.SSRIF: FamilyRules(False, False, row_bound="le", reading=ROWS_RL, counterpart="SRIF"),
    T.SRIF: FamilyRules(True, False, reading=ROWS_RL, descent=HIGHER_ROW),
    T.SSIF: FamilyRules(False, True, row_bound="ge", reading=ROWS_LR, counterpart="SIF"),
    T.SIF: FamilyRules(True, True, reading=ROWS_LR, descent=HIGHER_ROW),
    T.RSSF: FamilyRules(False, False, columns_distinct=True, row_bound="le",
                        triple=TripleKind.REVERSE, reading=COLS_UP, counterpart="RSF"),
    T.RSF: FamilyRules(True, False, columns_distinct=True, triple=TripleKind.REVERSE,
                       reading=COLS_UP, descent=WEAKLY_RIGHT),
    T.YSSF: FamilyRules(False, True, columns_distinct=True, row_bound="ge",
                        triple=TripleKind.YOUNG, reading=COLS_DOWN, counterpart="YSF",
                        ties_later_smaller=True),
    T.YSF: FamilyRules(True, True, columns_distinct=True, triple=TripleKind.YOUNG,
                       reading=COLS_DOWN, descent=WEAKLY_LEFT),
    T.FSSF: FamilyRules(False, False, row_bound="le",
                        higher_rows_larger=True, reading=ROWS_RL),
    T.ATOM: FamilyRules(False, False, columns_distinct=True, row_bound="le",
                        triple=TripleKind.REVERSE, first_column_is_row_index=True,
                        reading=COLS_UP),
    T.DIRF: FamilyRules(True, True, first_column_increases_up=False,
                        triple=TripleKind.RECORDING, dirf_strips=True),
}
del T


def parse_family(name: str) -> FamilyTag:
    try:
        return FamilyTag(name.upper())
    except ValueError:
        raise ValueError(f"unknown family {name!r}") from None


# ---------------------------------------------------------------------------
# validation

def _triple_ok(kind: TripleKind, x, y, z) -> bool:
    if kind is TripleKind.REVERSE:
        return not (y <= z) or y < x
    if kind is TripleKind.YOUNG:
        return not (y >= z) or y > x
    return not (y > x) or y > z


def triples(kind: TripleKind, shape: WeakComposition) -> Iterator[tuple[Cell | None, Cell, Cell | None]]:
    """Every triple of the given kind in D(shape) as (x, y, z) cells; a missing box is None."""
    ell = len(shape)
    for r in range(1, ell + 1):
        length = shape[r - 1]
        if kind is TripleKind.RECORDING:
            for c in range(1, length + 1):
                x, z = (r, c), ((r, c + 1) if c < length else None)
                for r2 in range(r + 1, ell + 1):
                    if shape[r2 - 1] >= c:
                        yield x, (r2, c), z
            continue
        others = range(r + 1, ell + 1) if kind is TripleKind.REVERSE else range(1, r)
        for c in range(2, length + 2):
            z, x = (r, c - 1), ((r, c) if c <= length else None)
            for r2 in others:
                if shape[r2 - 1] >= c:
                    yield x, (r2, c), z


def _missing_value(kind: TripleKind):
    return 0 if kind is TripleKind.REVERSE else INF


def validate(tag: FamilyTag, f: Filling) -> bool:
    """True iff ``f`` satisfies every condition of the family ``tag``."""
    rules = RULES[tag]
    shape = f.shape
    entries = f.entries()
    if any(v < 1 for v in entries):
        return False
    if rules.tableau and any(p == 0 for p in shape) and any(shape):
        return False
    if rules.standard and sorted(entries) != list(range(1, len(entries) + 1)):
        return False

    for row in f.rows:
        for left, right in zip(row, row[1:]):
            if rules.rows_increase and left > right:
                return False
            if not rules.rows_increase and left < right:
                return False

    firsts = f.first_column()
    if not rules.higher_rows_larger:
        for (_, lower), (_, upper) in zip(firsts, firsts[1:]):
            if rules.first_column_increases_up and not lower < upper:
                return False
            if not rules.first_column_increases_up and not lower > upper:
                return False
    if rules.first_column_is_row_index and any(r != v for r, v in firsts):
        return False

    if rules.columns_distinct:
        for c in range(1, max(shape, default=0) + 1):
            column = [f.get(r, c) for r in range(1, f.length + 1) if f.get(r, c) is not None]
            if len(column) != len(set(column)):
                return False

    if rules.row_bound and not rules.standard:
        for r, _, v in f.cells():
            if rules.row_bound == "le" and v > r:
                return False
            if rules.row_bound == "ge" and v < r:
                return False

    if rules.higher_rows_larger:
        for r, _, v in f.cells():
            for r2, _, w in f.cells():
                if r2 > r and not w > v:
                    return False

    if rules.triple is not None:
        missing = _missing_value(rules.triple)
        for x, y, z in triples(rules.triple, shape):
            xv = f.get(*x) if x else missing
            zv = f.get(*z) if z else missing
            if not _triple_ok(rules.triple, xv, f.get(*y), zv):
                return False

    if rules.dirf_strips and not _dirf_strips_ok(f):
        return False
    return True


def _dirf_strips_ok(f: Filling) -> bool:
    pos = f.positions()
    for i in range(1, f.size):
        if pos[i + 1][1] <= pos[i][1] and pos[i + 1][1] != 1:
            return False
    return True


def require(tag: FamilyTag, f: Filling) -> None:
    if not validate(tag, f):
        raise ValueError(f"filling {[list(r) for r in f.rows]} is not a valid {tag.value}")


# ---------------------------------------------------------------------------
# enumeration

def enumerate_fillings(tag: FamilyTag, shape: Sequence[int], max_entry: int | None = None) -> list[Filling]:
    """All fillings of D(shape) in family ``tag``, sorted by reading word.

    ``max_entry`` bounds the entries of semistandard families and defaults to
    the number of rows; standard families ignore it.
    """
    shape = tuple(shape)
    if any(p < 0 for p in shape):
        raise ValueError(f"negative part in shape {shape}")
    if not RULES[tag].standard and max_entry is None:
        max_entry = len(shape)
    if RULES[tag].standard:
        max_entry = None
    return list(_enumerate_cached(tag, shape, max_entry))


@lru_cache(maxsize=None)
def _enumerate_cached(tag: FamilyTag, shape: WeakComposition, max_entry: int | None) -> tuple[Filling, ...]:
    rules = RULES[tag]
    if rules.tableau and any(p == 0 for p in shape) and any(shape):
        return ()
    cells = [(r, c) for r in range(1, len(shape) + 1) for c in range(1, shape[r - 1] + 1)]
    n = len(cells)
    index = {cell: i for i, cell in enumerate(cells)}
    checks = _compile_checks(rules, shape, index)
    top = n if rules.standard else max_entry

    def domain(r: int, c: int) -> range:
        lo, hi = 1, top
        if not rules.standard:
            if rules.row_bound == "le":
                hi = min(hi, r)
            elif rules.row_bound == "ge":
                lo = max(lo, r)
        if rules.first_column_is_row_index and c == 1:
            lo, hi = max(lo, r), min(hi, r)
        return range(lo, hi + 1)

    domains = [domain(r, c) for r, c in cells]
    vals = [0] * n
    used = [False] * (top + 1 if top else 1)
    out: list[Filling] = []

    def build() -> Filling:
        rows, k = [], 0
        for length in shape:
            rows.append(tuple(vals[k:k + length]))
            k += length
        return Filling(tuple(rows))

    def place(i: int) -> None:
        if i == n:
            f = build()
            if not rules.dirf_strips or _dirf_strips_ok(f):
                out.append(f)
            return
        for v in domains[i]:
            if rules.standard and used[v]:
                continue
            vals[i] = v
            if all(check(vals) for check in checks[i]):
                if rules.standard:
                    used[v] = True
                place(i + 1)
                if rules.standard:
                    used[v] = False

    place(0)
    if rules.reading:
        out.sort(key=lambda f: reading_word(tag, f))
    else:
        out.sort(key=lambda f: f.rows)
    return tuple(out)


def _compile_checks(rules: FamilyRules, shape: WeakComposition, index: dict[Cell, int]) -> list[list[Callable]]:
    """Constraints as predicates on the value vector, each attached to its last cell."""
    n = len(index)
    checks: list[list[Callable]] = [[] for _ in range(n)]

    def attach(fn: Callable, *cells: Cell) -> None:
        checks[max(index[c] for c in cells)].append(fn)

    for (r, c), i in index.items():
        if c >= 2:
            j = index[(r, c - 1)]
            if rules.rows_increase:
                attach(lambda v, i=i, j=j: v[j] <= v[i], (r, c))
            else:
                attach(lambda v, i=i, j=j: v[j] >= v[i], (r, c))

    nonempty = [r for r in range(1, len(shape) + 1) if shape[r - 1]]
    if not rules.higher_rows_larger:
        for lower, upper in zip(nonempty, nonempty[1:]):
            i, j = index[(lower, 1)], index[(upper, 1)]
            if rules.first_column_increases_up:
                attach(lambda v, i=i, j=j: v[i] < v[j], (lower, 1), (upper, 1))
            else:
                attach(lambda v, i=i, j=j: v[i] > v[j], (lower, 1), (upper, 1))

    if rules.columns_distinct and not rules.standard:
        for (r, c), i in index.items():
            for (r2, c2), j in index.items():
                if c2 == c and r2 < r:
                    attach(lambda v, i=i, j=j: v[i] != v[j], (r, c), (r2, c2))

    if rules.higher_rows_larger:
        for (r, c), i in index.items():
            for (r2, c2), j in index.items():
                if r2 < r:
                    attach(lambda v, i=i, j=j: v[i] > v[j], (r, c), (r2, c2))

    if rules.triple is not None:
        kind = rules.triple
        missing = _missing_value(kind)
        for x, y, z in triples(kind, shape):
            present = [cell for cell in (x, y, z) if cell is not None]
            xi = index[x] if x else None
            zi = index[z] if z else None
            yi = index[y]

            def fn(v, xi=xi, yi=yi, zi=zi, kind=kind, missing=missing):
                return _triple_ok(kind, v[xi] if xi is not None else missing, v[yi],
                                  v[zi] if zi is not None else missing)
            attach(fn, *present)
    return checks


# ---------------------------------------------------------------------------
# reading words, weights, standardization, descents

def reading_cells(tag: FamilyTag, f: Filling) -> list[Cell]:
    order = RULES[tag].reading
    if order is None:
        raise ValueError(f"{tag.value} has no reading order")
    shape = f.shape
    ell = len(shape)
    width = max(shape, default=0)
    if order == ROWS_RL:
        return [(r, c) for r in range(ell, 0, -1) for c in range(shape[r - 1], 0, -1)]
    if order == ROWS_LR:
        return [(r, c) for r in range(ell, 0, -1) for c in range(1, shape[r - 1] + 1)]
    if order == COLS_UP:
        return [(r, c) for c in range(width, 0, -1) for r in range(1, ell + 1) if shape[r - 1] >= c]
    return [(r, c) for c in range(width, 0, -1) for r in range(ell, 0, -1) if shape[r - 1] >= c]


def reading_word(tag: FamilyTag, f: Filling) -> list[int]:
    return [f.get(r, c) for r, c in reading_cells(tag, f)]


def weight(f: Filling, length: int | None = None) -> WeakComposition:
    """Multiplicities of 1, 2, ...; padded with zeros to ``length`` if given."""
    entries = f.entries()
    top = max(entries, default=0)
    if length is None:
        length = top
    if top > length:
        raise ValueError(f"entry {top} does not fit a weight of length {length}")
    counts = [0] * length
    for v in entries:
        counts[v - 1] += 1
    return tuple(counts)


def sorted_cells(tag: FamilyTag, f: Filling) -> list[Cell]:
    """Cells from smallest entry to largest, ties broken by the family's reading order."""
    order = reading_cells(tag, f)
    later_smaller = RULES[tag].ties_later_smaller
    ranked = sorted(range(len(order)),
                    key=lambda k: (f.get(*order[k]), -k if later_smaller else k))
    return [order[k] for k in ranked]


def standardize(tag: FamilyTag, f: Filling) -> Filling:
    rules = RULES[tag]
    if rules.counterpart is None:
        raise ValueError(f"{tag.value} has no standardization")
    require(tag, f)
    label = {cell: i for i, cell in enumerate(sorted_cells(tag, f), start=1)}
    return Filling(tuple(tuple(label[(r, c)] for c in range(1, len(row) + 1))
                         for r, row in enumerate(f.rows, start=1)))


def standard_counterpart(tag: FamilyTag) -> FamilyTag:
    name = RULES[tag].counterpart
    if name is None:
        raise ValueError(f"{tag.value} has no standard counterpart")
    return FamilyTag(name)


def is_descent(rule: str, here: Cell, nxt: Cell) -> bool:
    """Whether the box ``nxt`` (holding i+1) is a descent relative to ``here`` (holding i)."""
    if rule == HIGHER_ROW:
        return nxt[0] > here[0]
    if rule == WEAKLY_RIGHT:
        return nxt[1] >= here[1]
    return nxt[1] <= here[1]


def descent_set(tag: FamilyTag, s: Filling) -> frozenset[int]:
    rule = RULES[tag].descent
    if rule is None:
        raise ValueError(f"{tag.value} has no descent set")
    require(tag, s)
    pos = s.positions()
    return frozenset(i for i in range(1, s.size) if is_descent(rule, pos[i], pos[i + 1]))


def descent_composition(tag: FamilyTag, s: Filling) -> tuple[int, ...]:
    return descent_set_to_composition(descent_set(tag, s), s.size)


def row_strip_shape(q: Filling) -> WeakComposition:
    """Lengths of the row strips starting in each row, listed top to bottom."""
    require(FamilyTag.DIRF, q)
    pos = q.positions()
    out = []
    for row in reversed(q.rows):
        if not row:
            out.append(0)
            continue
        v, length = row[0], 1
        while v + 1 in pos and pos[v + 1][1] > pos[v][1]:
            v += 1
            length += 1
        out.append(length)
    return tuple(out)


def flip(f: Filling, top: int) -> Filling:
    """Reverse the row order and replace each entry i by top + 1 - i."""
    return Filling(tuple(tuple(top + 1 - v for v in row) for row in reversed(f.rows)))


def remove_empty_rows(f: Filling) -> Filling:
    return Filling(tuple(row for row in f.rows if row))
