"""Wall-clock benchmarks for the counting and sequence paths."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .engine import count_dfs, count_dp
from .lattice import build_family
from .sequences import pell_h_recurrence

# ratio of times for 2n vs n that still counts as linear growth
LINEAR_RATIO = 4.0


@dataclass
class BenchRow:
    task: str
    n: int
    seconds: float
    detail: dict

    def line(self) -> str:
        extra = " ".join(f"{k}={v}" for k, v in self.detail.items())
        return f"{self.task:<10} n={self.n:<8} {self.seconds:10.6f}s {extra}".rstrip()


def decimal_digits(x: int) -> int:
    x = abs(x)
    if x == 0:
        return 1
    k = max(1, int((x.bit_length() - 1) * math.log10(2)))
    while 10 ** k <= x:
        k += 1
    while k > 1 and 10 ** (k - 1) > x:
        k -= 1
    return k


def _best_of(fn, repeats: int) -> tuple[float, object]:
    best, result = math.inf, None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_dp_count(sizes: list[int], repeats: int = 3) -> list[BenchRow]:
    rows = []
    for n in sizes:
        cx = build_family("H", n)
        secs, value = _best_of(lambda: count_dp(cx), repeats)
        rows.append(BenchRow("dp-count", n, secs, {"digits": decimal_digits(value)}))
    return rows


def expected_h_digits(n: int) -> float:
    return n * math.log10(1 + math.sqrt(2))


def bench_seq(sizes: list[int]) -> list[BenchRow]:
    rows = []
    for n in sizes:
        secs, (pn, hn) = _best_of(lambda: pell_h_recurrence(n), 1)
        d = decimal_digits(hn)
        rows.append(BenchRow("seq", n, secs, {
            "H_digits": d,
            "P_digits": decimal_digits(pn),
            "expected": f"{expected_h_digits(n):.1f}",
            "within_1": abs(d - expected_h_digits(n)) <= 1,
        }))
    return rows


def bench_dfs_vs_dp(sizes: list[int]) -> list[BenchRow]:
    rows = []
    for n in sizes:
        cx = build_family("H", n)
        t_dfs, c_dfs = _best_of(lambda: count_dfs(cx), 1)
        t_dp, c_dp = _best_of(lambda: count_dp(cx), 3)
        rows.append(BenchRow("dfs-vs-dp", n, t_dfs, {
            "dp_seconds": f"{t_dp:.6f}",
            "equal": c_dfs == c_dp,
            "dfs_slower": t_dfs > t_dp,
        }))
    return rows


def growth_ok(rows: list[BenchRow]) -> bool:
    """Time ratio stays below LINEAR_RATIO for every size doubling in ``rows``."""
    by_n = {row.n: row.seconds for row in rows}
    for n, secs in by_n.items():
        if 2 * n in by_n and secs > 0 and by_n[2 * n] / secs >= LINEAR_RATIO:
            return False
    return True


TASKS = {"dp-count": bench_dp_count, "seq": bench_seq, "dfs-vs-dp": bench_dfs_vs_dp}
