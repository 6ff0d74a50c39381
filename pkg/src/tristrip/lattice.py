"""Two-row triangular strips as finite cell complexes.

A cell is addressed by ``(row, index)``. Row 0 is the lower row, row 1 the
upper one. Orientation is a function of the address: a row-0 cell points up
when its index is even, a row-1 cell points up when its index is odd. In the
half-unit embedding used for rendering, an up cell ``i`` in row ``r`` has
vertices ``(i, r), (i+2, r), (i+1, r+1)`` and a down cell has
``(i, r+1), (i+2, r+1), (i+1, r)``.

A side-2 triangle covers four cells. Up placements are anchored at an even
row-0 index ``i`` and cover ``(0,i), (0,i+1), (0,i+2), (1,i+1)``; down
placements are anchored at an even row-1 index ``j`` and cover
``(1,j), (1,j+1), (1,j+2), (0,j+1)``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import ComplexParseError, DomainError


@dataclass(frozen=True, order=True)
class TriCell:
    row: int
    index: int

    def __post_init__(self) -> None:
        if self.row not in (0, 1):
            raise ValueError(f"row must be 0 or 1, got {self.row}")
        if self.index < 0:
            raise ValueError(f"index must be non-negative, got {self.index}")

    @property
    def is_up(self) -> bool:
        return (self.index % 2 == 0) if self.row == 0 else (self.index % 2 == 1)

    @property
    def sort_key(self) -> tuple[int, int]:
        """Canonical cell order: by index, then row."""
        return (self.index, self.row)

    def vertices(self) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
        i, r = self.index, self.row
        if self.is_up:
            return ((i, r), (i + 2, r), (i + 1, r + 1))
        return ((i, r + 1), (i + 2, r + 1), (i + 1, r))

    def adjacent(self, other: TriCell) -> bool:
        """Edge-sharing test from addresses alone."""
        if self.row == other.row:
            return abs(self.index - other.index) == 1
        return self.index == other.index and self.index % 2 == 1


def cell(row: int, index: int) -> TriCell:
    return TriCell(row, index)


@dataclass(frozen=True, order=True)
class LargePlacement:
    anchor_index: int
    anchor_row: int

    def __post_init__(self) -> None:
        if self.anchor_row not in (0, 1) or self.anchor_index < 0 or self.anchor_index % 2:
            raise ValueError(f"bad placement anchor ({self.anchor_row}, {self.anchor_index})")

    @property
    def is_up(self) -> bool:
        return self.anchor_row == 0

    @cached_property
    def cells(self) -> frozenset[TriCell]:
        i = self.anchor_index
        if self.anchor_row == 0:
            return frozenset((TriCell(0, i), TriCell(0, i + 1), TriCell(0, i + 2), TriCell(1, i + 1)))
        return frozenset((TriCell(1, i), TriCell(1, i + 1), TriCell(1, i + 2), TriCell(0, i + 1)))

    def vertices(self) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
        i = self.anchor_index
        if self.is_up:
            return ((i, 0), (i + 4, 0), (i + 2, 2))
        return ((i, 2), (i + 4, 2), (i + 2, 0))

    def label(self) -> str:
        return f"{'up' if self.is_up else 'down'}@{self.anchor_index}"

    def __repr__(self) -> str:
        return f"LargePlacement({self.label()})"


def large_placements(cells: Iterable[TriCell]) -> list[LargePlacement]:
    """All side-2 placements whose four cells lie in ``cells``.

    Sorted by (anchor index, anchor row).
    """
    cellset = frozenset(cells)
    found = []
    for c in cellset:
        if c.index % 2:
            continue
        p = LargePlacement(c.index, c.row)
        if p.cells <= cellset:
            found.append(p)
    found.sort()
    return found


@dataclass(frozen=True)
class StripComplex:
    name: str
    cells: frozenset[TriCell]

    @classmethod
    def from_cells(cls, name: str, cells: Iterable[TriCell]) -> StripComplex:
        cells = list(cells)
        cellset = frozenset(cells)
        if len(cellset) != len(cells):
            raise ValueError("duplicate cells")
        return cls(name, cellset)

    @cached_property
    def placements(self) -> tuple[LargePlacement, ...]:
        return tuple(large_placements(self.cells))

    @cached_property
    def ordered_cells(self) -> tuple[TriCell, ...]:
        return tuple(sorted(self.cells, key=lambda c: c.sort_key))

    def __len__(self) -> int:
        return len(self.cells)

    def row_cells(self, row: int) -> list[int]:
        return sorted(c.index for c in self.cells if c.row == row)

    def mirrored(self, width: int, name: str | None = None) -> StripComplex:
        """Image under ``index -> width - index`` on both rows.

        ``width`` must be even so that orientation is preserved.
        """
        if width % 2:
            raise ValueError("mirror width must be even")
        return StripComplex(name or self.name, frozenset(TriCell(c.row, width - c.index) for c in self.cells))


@dataclass(frozen=True)
class ConflictGraph:
    vertices: tuple[LargePlacement, ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in self.vertices]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(s) for s in adj)


def conflict_graph(complex_: StripComplex) -> ConflictGraph:
    verts = complex_.placements
    edges = tuple(
        (a, b)
        for a in range(len(verts))
        for b in range(a + 1, len(verts))
        if verts[a].cells & verts[b].cells
    )
    return ConflictGraph(verts, edges)


class FamilyId(str, enum.Enum):
    H = "H"
    P = "P"
    X = "X"
    Y = "Y"
    Z = "Z"
    A = "A"
    B = "B"


def _rows(row0: range, row1: range) -> list[TriCell]:
    return [TriCell(0, i) for i in row0] + [TriCell(1, i) for i in row1]


def build_family(family: FamilyId | str, n: int) -> StripComplex:
    """Canonical complex of a built-in family at length ``n``.

    Z is an alias of H (same cell set). Y is the mirror image of P.
    """
    family = FamilyId(family)
    if n < 1:
        raise DomainError(f"{family.value}_n requires n >= 1, got {n}")
    m = 2 * n
    if family in (FamilyId.H, FamilyId.Z):
        cells = _rows(range(0, m - 1), range(0, m - 1))
    elif family is FamilyId.P:
        cells = _rows(range(0, m - 1), range(0, m - 2))
    elif family is FamilyId.Y:
        cells = _rows(range(0, m - 1), range(1, m - 1))
    elif family is FamilyId.X:
        cells = _rows(range(0, m - 2), range(0, m - 2))
    elif family is FamilyId.A:
        cells = _rows(range(0, m), range(1, m + 1))
    else:
        cells = _rows(range(0, m + 1), range(1, m))
    return StripComplex.from_cells(f"{family.value}{n}", cells)


def expected_cell_count(family: FamilyId | str, n: int) -> int:
    return {"H": 4 * n - 2, "Z": 4 * n - 2, "P": 4 * n - 3, "Y": 4 * n - 3,
            "X": 4 * n - 4, "A": 4 * n, "B": 4 * n}[FamilyId(family).value]


# ---------------------------------------------------------------------------
# text format

_INTERVAL = re.compile(r"^(\d+)\.\.(\d+)$")
_CELLREF = re.compile(r"^(-?\d+)\s*,\s*(-?\d+)$")


def _parse_cellref(text: str, lineno: int) -> TriCell:
    m = _CELLREF.match(text.strip())
    if not m:
        raise ComplexParseError(lineno, f"expected '<row>,<index>', got {text!r}")
    row, index = int(m.group(1)), int(m.group(2))
    if row not in (0, 1):
        raise ComplexParseError(lineno, f"row must be 0 or 1, got {row}")
    if index < 0:
        raise ComplexParseError(lineno, f"negative index {index}")
    return TriCell(row, index)


def parse_complex(text: str) -> StripComplex:
    name = "custom"
    rows: dict[int, list[int]] = {}
    cells: set[TriCell] = set()
    origin: dict[TriCell, int] = {}
    dels: list[tuple[int, TriCell]] = []
    seen_name = False

    def put(c: TriCell, lineno: int) -> None:
        if c in cells:
            raise ComplexParseError(lineno, f"duplicate cell {c.row},{c.index} (first on line {origin[c]})")
        cells.add(c)
        origin[c] = lineno

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "name":
            if seen_name or not rest or len(rest.split()) != 1:
                raise ComplexParseError(lineno, "name takes exactly one token and may appear once")
            name, seen_name = rest, True
        elif key in ("row0", "row1"):
            row = int(key[-1])
            if row in rows:
                raise ComplexParseError(lineno, f"{key} given twice")
            if rest == "empty":
                rows[row] = []
                continue
            m = _INTERVAL.match(rest)
            if not m:
                if re.match(r"^-\d+\.\.", rest) or re.match(r"^\d+\.\.-", rest):
                    raise ComplexParseError(lineno, f"negative index in {rest!r}")
                raise ComplexParseError(lineno, f"expected '<a>..<b>' or 'empty', got {rest!r}")
            a, b = int(m.group(1)), int(m.group(2))
            if a > b:
                raise ComplexParseError(lineno, f"empty interval {a}..{b}; use 'empty'")
            rows[row] = list(range(a, b + 1))
            for i in rows[row]:
                put(TriCell(row, i), lineno)
        elif key == "add":
            put(_parse_cellref(rest, lineno), lineno)
        elif key == "del":
            dels.append((lineno, _parse_cellref(rest, lineno)))
        else:
            raise ComplexParseError(lineno, f"unknown directive {key!r}")

    for lineno, c in dels:
        if c not in cells:
            raise ComplexParseError(lineno, f"del of absent cell {c.row},{c.index}")
        cells.remove(c)
    return StripComplex(name, frozenset(cells))


def serialize_complex(complex_: StripComplex) -> str:
    """Canonical text: each row as its full span plus ``del`` lines for holes."""
    lines = [f"name {complex_.name}"]
    holes = []
    for row in (0, 1):
        idx = complex_.row_cells(row)
        if not idx:
            lines.append(f"row{row} empty")
            continue
        lines.append(f"row{row} {idx[0]}..{idx[-1]}")
        present = set(idx)
        holes.extend(f"del {row},{i}" for i in range(idx[0], idx[-1] + 1) if i not in present)
    return "\n".join(lines + holes) + "\n"
