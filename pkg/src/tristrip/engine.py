"""Counting and enumerating tilings of strip complexes.

Small tiles fill whatever the large tiles leave uncovered, so a tiling is
determined by its set of side-2 placements, and the tilings of a complex are
exactly the independent sets of its placement conflict graph. Everything in
this module works on that reformulation:

* ``count_dfs`` branches on the first still-available placement;
* ``count_dp`` sweeps the cells once, keeping a few coverage bits;
* ``exact_cover_oracle`` ignores placements altogether and covers cells
  one by one with pieces it derives from the geometry.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .lattice import LargePlacement, StripComplex, TriCell, conflict_graph

ORACLE_MAX_CELLS = 40


class RefusalError(ValueError):
    """Input too large for the reference oracle."""


class Method(str, enum.Enum):
    DFS = "dfs"
    DP = "dp"


@dataclass(frozen=True)
class TileStats:
    tilings: int
    total_tiles: int
    small_tiles: int
    large_tiles: int

    @classmethod
    def from_sums(cls, n_cells: int, tilings: int, large_sum: int) -> TileStats:
        small = n_cells * tilings - 4 * large_sum
        stats = cls(tilings, small + large_sum, small, large_sum)
        stats.check(n_cells)
        return stats

    def check(self, n_cells: int) -> None:
        assert self.total_tiles == self.small_tiles + self.large_tiles
        assert self.small_tiles + 4 * self.large_tiles == n_cells * self.tilings
        assert self.total_tiles == n_cells * self.tilings - 3 * self.large_tiles

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.tilings, self.total_tiles, self.small_tiles, self.large_tiles)


@dataclass(frozen=True)
class Tiling:
    larges: tuple[LargePlacement, ...]

    def small_cells(self, complex_: StripComplex) -> list[TriCell]:
        covered = set().union(*(p.cells for p in self.larges)) if self.larges else set()
        return [c for c in complex_.ordered_cells if c not in covered]

    @property
    def large_count(self) -> int:
        return len(self.larges)


# ---------------------------------------------------------------------------
# DFS over placements

def _neighbour_masks(complex_: StripComplex) -> list[int]:
    graph = conflict_graph(complex_)
    return [sum(1 << j for j in nbrs) for nbrs in graph.neighbours]


def _dfs(nbr: list[int], avail: int) -> tuple[int, int]:
    """(count, summed large tiles) over independent subsets of ``avail``."""
    if not avail:
        return 1, 0
    low = avail & -avail
    k = low.bit_length() - 1
    c0, s0 = _dfs(nbr, avail & ~low)
    c1, s1 = _dfs(nbr, avail & ~low & ~nbr[k])
    return c0 + c1, s0 + s1 + c1


def _dfs_task(nbr: list[int], avail: int, base_larges: int) -> tuple[int, int]:
    c, s = _dfs(nbr, avail)
    return c, s + base_larges * c


def _split(nbr: list[int], avail: int, want: int) -> list[tuple[int, int]]:
    frontier = [(avail, 0)]
    while len(frontier) < want:
        nxt = []
        grew = False
        for a, base in frontier:
            if not a:
                nxt.append((a, base))
                continue
            grew = True
            low = a & -a
            k = low.bit_length() - 1
            nxt.append((a & ~low, base))
            nxt.append((a & ~low & ~nbr[k], base + 1))
        frontier = nxt
        if not grew:
            break
    return frontier


def _dfs_sums(complex_: StripComplex, threads: int = 1) -> tuple[int, int]:
    nbr = _neighbour_masks(complex_)
    avail = (1 << len(nbr)) - 1
    if threads <= 1 or len(nbr) < 8:
        return _dfs(nbr, avail)
    tasks = _split(nbr, avail, 4 * threads)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(_dfs_task, [nbr] * len(tasks), [a for a, _ in tasks], [b for _, b in tasks]))
    return sum(c for c, _ in results), sum(s for _, s in results)


def count_dfs(complex_: StripComplex, threads: int = 1) -> int:
    return _dfs_sums(complex_, threads)[0]


# ---------------------------------------------------------------------------
# profile DP

# Offsets of a placement's cells from its anchor, in the linear order
# position = 2 * index + row.
_UP_OFFSETS = (0, 2, 3, 4)
_DOWN_OFFSETS = (0, 1, 2, 4)


def _dp_sums(complex_: StripComplex) -> tuple[int, int]:
    if not complex_.cells:
        return 1, 0
    present = {2 * c.index + c.row for c in complex_.cells}
    anchors = {2 * p.anchor_index + p.anchor_row for p in complex_.placements}
    up_mask = sum(1 << o for o in _UP_OFFSETS)
    down_mask = sum(1 << o for o in _DOWN_OFFSETS)
    # mask bit k: position pos + k is already covered by a committed placement
    states: dict[int, tuple[int, int]] = {0: (1, 0)}
    for pos in range(min(present), max(present) + 1):
        nxt: dict[int, tuple[int, int]] = {}

        def push(mask: int, count: int, larges: int) -> None:
            if mask in nxt:
                c, s = nxt[mask]
                nxt[mask] = (c + count, s + larges)
            else:
                nxt[mask] = (count, larges)

        if pos not in present:
            for mask, (c, s) in states.items():
                push(mask >> 1, c, s)
            states = nxt
            continue
        shape = up_mask if pos % 2 == 0 else down_mask
        for mask, (c, s) in states.items():
            if mask & 1:
                push(mask >> 1, c, s)
                continue
            push(mask >> 1, c, s)
            if pos in anchors and not mask & shape:
                push((mask | shape) >> 1, c, s + c)
        states = nxt
    assert set(states) <= {0}
    return states.get(0, (0, 0))


def count_dp(complex_: StripComplex) -> int:
    return _dp_sums(complex_)[0]


def count(complex_: StripComplex, method: Method | str = Method.DP, threads: int = 1) -> int:
    if Method(method) is Method.DFS:
        return count_dfs(complex_, threads)
    return count_dp(complex_)


def stats(complex_: StripComplex, method: Method | str = Method.DP, threads: int = 1) -> TileStats:
    if Method(method) is Method.DFS:
        tilings, larges = _dfs_sums(complex_, threads)
    else:
        tilings, larges = _dp_sums(complex_)
    return TileStats.from_sums(len(complex_), tilings, larges)


# ---------------------------------------------------------------------------
# enumeration

def iter_tilings(complex_: StripComplex) -> Iterator[Tiling]:
    """All tilings in canonical order.

    The order is by the binary rank sum(2**k for placement k in the set),
    k being a placement's position in canonical placement order; equivalently
    placement sets compared from their highest placement down (colex).
    """
    placements = complex_.placements
    nbr = _neighbour_masks(complex_)
    stack = [(len(placements) - 1, 0, 0)]
    while stack:
        k, forbidden, chosen = stack.pop()
        if k < 0:
            yield Tiling(tuple(placements[j] for j in range(len(placements)) if chosen >> j & 1))
            continue
        bit = 1 << k
        if not forbidden & bit:
            stack.append((k - 1, forbidden | nbr[k], chosen | bit))
        stack.append((k - 1, forbidden, chosen))


def enumerate_tilings(complex_: StripComplex, limit: int) -> list[Tiling]:
    if limit < 0:
        raise ValueError("limit must be >= 0")
    out = []
    if limit == 0:
        return out
    for t in iter_tilings(complex_):
        out.append(t)
        if len(out) >= limit:
            break
    return out


def tiling_at(complex_: StripComplex, index: int) -> Tiling:
    if index < 0:
        raise IndexError(index)
    for k, t in enumerate(iter_tilings(complex_)):
        if k == index:
            return t
    raise IndexError(f"tiling index {index} out of range")


# ---------------------------------------------------------------------------
# reference oracle

def _inside(tri: tuple[tuple[int, int], ...], pt: tuple[int, int]) -> bool:
    (ax, ay), (bx, by), (cx, cy) = tri
    px, py = pt
    d1 = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
    d2 = (cx - bx) * (py - by) - (cy - by) * (px - bx)
    d3 = (ax - cx) * (py - cy) - (ay - cy) * (px - cx)
    neg = d1 < 0 or d2 < 0 or d3 < 0
    pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (neg and pos)


def geometric_large_pieces(cells: frozenset[TriCell]) -> list[frozenset[TriCell]]:
    """Side-2 triangles of the plane lattice whose unit cells all lie in ``cells``.

    Found by scanning every candidate triangle position and collecting the
    unit cells lying inside it; does not use the placement templates.
    """
    if not cells:
        return []
    lo = min(c.index for c in cells)
    hi = max(c.index for c in cells)
    universe = [TriCell(r, i) for r in (0, 1) for i in range(max(0, lo - 4), hi + 5)]
    pieces = []
    for x in range(lo - 4, hi + 3):
        for tri in (((x, 0), (x + 4, 0), (x + 2, 2)), ((x, 2), (x + 4, 2), (x + 2, 0))):
            inner = frozenset(u for u in universe if all(_inside(tri, v) for v in u.vertices()))
            # a side-2 triangle has area 4; fewer inner cells means misaligned
            if len(inner) == 4 and inner <= cells:
                pieces.append(inner)
    return pieces


def exact_cover_oracle(complex_: StripComplex) -> int:
    """Exact covers of the cell set by single cells and side-2 triangles."""
    if len(complex_) > ORACLE_MAX_CELLS:
        raise RefusalError(f"oracle limited to {ORACLE_MAX_CELLS} cells, got {len(complex_)}")
    order = sorted(complex_.cells, key=lambda c: c.sort_key)
    pieces_by_cell: dict[TriCell, list[frozenset[TriCell]]] = {c: [] for c in order}
    for piece in geometric_large_pieces(complex_.cells):
        for c in piece:
            pieces_by_cell[c].append(piece)

    covered: set[TriCell] = set()

    def solve(start: int) -> int:
        while start < len(order) and order[start] in covered:
            start += 1
        if start == len(order):
            return 1
        c = order[start]
        covered.add(c)
        total = solve(start + 1)
        covered.discard(c)
        for piece in pieces_by_cell[c]:
            if covered.isdisjoint(piece):
                covered.update(piece)
                total += solve(start + 1)
                covered.difference_update(piece)
        return total

    return solve(0)
