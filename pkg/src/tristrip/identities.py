"""Batch checks of the strip-tiling identities.

Each suite is a list of named identities ``(name, n_min, f)`` where ``f(n)``
returns both sides. A suite run evaluates every identity at every
``n_min <= n <= n_max`` and keeps both sides of each check, so a failure
documents itself.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .engine import count_dfs, count_dp, stats
from .errors import InvariantError
from .fixtures import check_shipped
from .lattice import FamilyId, build_family
from .report import IdentityReport, merge
from .sequences import (
    DOMAIN_START, SeqId, half_companion as H, pell as P, seq_value, seq_value_alt, sign,
    supported_routes,
)
from .zroot2 import SILVER, SILVER_BAR, ZRoot2, zpow

Identity = tuple[str, int, Callable[[int], tuple[object, object]]]

DFS_BUDGET = 12
DP_BUDGET = 400


def A(n: int) -> int:
    return seq_value(SeqId.A, n)


def B(n: int) -> int:
    return seq_value(SeqId.B, n)


def C(n: int) -> int:
    return seq_value(SeqId.C, n)


def D(n: int) -> int:
    return seq_value(SeqId.D, n)


def _tile(sid: str) -> Callable[[int], int]:
    return lambda n: seq_value(sid, n)


h, p, q, r, phi, theta = (_tile(s) for s in ("h", "p", "q", "r", "phi", "theta"))


class _RunningSums:
    """sum_{i=1..n} H_{2i + parity}, extended incrementally."""

    def __init__(self, parity: int) -> None:
        self.parity = parity
        self.sums = [0]

    def __call__(self, n: int) -> int:
        while len(self.sums) <= n:
            i = len(self.sums)
            self.sums.append(self.sums[-1] + H(2 * i + self.parity))
        return self.sums[n]


def _thm4(printed_eight: bool) -> list[Identity]:
    even, odd = _RunningSums(0), _RunningSums(1)
    ids: list[Identity] = [
        ("(1) A_n = B_n + (-1)^n", 3, lambda n: (A(n), B(n) + sign(n))),
        ("(2) A_n = B_{n-1} + P_n", 3, lambda n: (A(n), B(n - 1) + P(n))),
        ("(2) B_n = A_{n-1} + P_n", 3, lambda n: (B(n), A(n - 1) + P(n))),
        ("(3) A_{n-1} + A_{n-2} = P_n", 3, lambda n: (A(n - 1) + A(n - 2), P(n))),
        ("(3) B_{n-1} + B_{n-2} = P_n", 3, lambda n: (B(n - 1) + B(n - 2), P(n))),
        ("(4) A_n = 2B_{n-1} + B_{n-2}", 3, lambda n: (A(n), 2 * B(n - 1) + B(n - 2))),
        ("(4) B_n = 2A_{n-1} + A_{n-2}", 3, lambda n: (B(n), 2 * A(n - 1) + A(n - 2))),
        ("(5) A_n - A_{n-2} = H_n", 3, lambda n: (A(n) - A(n - 2), H(n))),
        ("(5) B_n - B_{n-2} = H_n", 3, lambda n: (B(n) - B(n - 2), H(n))),
        ("(5) A_n = A_{n-2} + P_{n-1} + P_n", 3, lambda n: (A(n), A(n - 2) + P(n - 1) + P(n))),
        ("(6) A_{2n} = A_0 + sum H_{2i}", 1, lambda n: (A(2 * n), A(0) + even(n))),
        ("(6) A_{2n+1} = A_1 + sum H_{2i+1}", 1, lambda n: (A(2 * n + 1), A(1) + odd(n))),
        ("(7) B_{2n} = B_0 + sum H_{2i}", 1, lambda n: (B(2 * n), B(0) + even(n))),
        ("(7) B_{2n+1} = B_1 + sum H_{2i+1}", 1, lambda n: (B(2 * n + 1), B(1) + odd(n))),
    ]
    if printed_eight:
        ids.append(("(8) P_n = P_{n-1} + A_{n-1} + B_{n-1}", 3,
                    lambda n: (P(n), P(n - 1) + A(n - 1) + B(n - 1))))
    else:
        ids.append(("(8) P_n = P_{n-1} + A_{n-2} + B_{n-2}", 3,
                    lambda n: (P(n), P(n - 1) + A(n - 2) + B(n - 2))))
    return ids


def _thm5() -> list[Identity]:
    return [
        ("(1) 2P_{2n}^2 = A_{4n-1}", 1, lambda n: (2 * P(2 * n) ** 2, A(4 * n - 1))),
        ("(1) A_{4n-1} = B_{4n-1} - 1", 1, lambda n: (A(4 * n - 1), B(4 * n - 1) - 1)),
        ("(2) 2P_{2n+1}^2 = B_{4n+1}", 1, lambda n: (2 * P(2 * n + 1) ** 2, B(4 * n + 1))),
        ("(2) B_{4n+1} = A_{4n+1} + 1", 1, lambda n: (B(4 * n + 1), A(4 * n + 1) + 1)),
        ("(3) H_{2n}^2 = B_{4n-1}", 1, lambda n: (H(2 * n) ** 2, B(4 * n - 1))),
        ("(3) B_{4n-1} = A_{4n-1} + 1", 1, lambda n: (B(4 * n - 1), A(4 * n - 1) + 1)),
        ("(4) H_{2n+1}^2 = A_{4n+1}", 1, lambda n: (H(2 * n + 1) ** 2, A(4 * n + 1))),
        ("(4) A_{4n+1} = B_{4n+1} - 1", 1, lambda n: (A(4 * n + 1), B(4 * n + 1) - 1)),
        ("(5) 2P_{2n}P_{2n+1} = B_{4n}", 1, lambda n: (2 * P(2 * n) * P(2 * n + 1), B(4 * n))),
        ("(5) B_{4n} = A_{4n} - 1", 1, lambda n: (B(4 * n), A(4 * n) - 1)),
        ("(6) 2P_{2n+1}P_{2n+2} = A_{4n+2}", 1, lambda n: (2 * P(2 * n + 1) * P(2 * n + 2), A(4 * n + 2))),
        ("(6) A_{4n+2} = B_{4n+2} + 1", 1, lambda n: (A(4 * n + 2), B(4 * n + 2) + 1)),
        ("(7) H_{2n}H_{2n+1} = A_{4n}", 1, lambda n: (H(2 * n) * H(2 * n + 1), A(4 * n))),
        ("(7) A_{4n} = B_{4n} + 1", 1, lambda n: (A(4 * n), B(4 * n) + 1)),
        ("(8) H_{2n+1}H_{2n+2} = B_{4n+2}", 1, lambda n: (H(2 * n + 1) * H(2 * n + 2), B(4 * n + 2))),
        ("(8) B_{4n+2} = A_{4n+2} - 1", 1, lambda n: (B(4 * n + 2), A(4 * n + 2) - 1)),
    ]


def _consequence() -> list[Identity]:
    return [
        ("(1) A_{2n} = 6A_{2n-2} - A_{2n-4} - 2", 2,
         lambda n: (A(2 * n), 6 * A(2 * n - 2) - A(2 * n - 4) - 2)),
        ("(2) A_{2n+1} = 6A_{2n-1} - A_{2n-3} + 2", 2,
         lambda n: (A(2 * n + 1), 6 * A(2 * n - 1) - A(2 * n - 3) + 2)),
        ("(3) B_{2n} = 6B_{2n-2} - B_{2n-4} + 2", 2,
         lambda n: (B(2 * n), 6 * B(2 * n - 2) - B(2 * n - 4) + 2)),
        ("(4) B_{2n+1} = 6B_{2n-1} - B_{2n-3} - 2", 2,
         lambda n: (B(2 * n + 1), 6 * B(2 * n - 1) - B(2 * n - 3) - 2)),
    ]


def _problem1() -> list[Identity]:
    X = lambda n: seq_value(SeqId.X, n)  # noqa: E731
    return [
        ("C_n = X_n^2 + 2Y_{n-1}Z_{n-1}", 2, lambda n: (C(n), X(n) ** 2 + 2 * P(n - 1) * H(n - 1))),
        ("2P_nH_n = P_{2n}", 1, lambda n: (2 * P(n) * H(n), P(2 * n))),
        ("C_n = H_{n-1}^2 + P_{2n-2}", 1, lambda n: (C(n), H(n - 1) ** 2 + P(2 * n - 2))),
        ("2C_{n+1} = H_{2n+1} + (-1)^n", 1, lambda n: (2 * C(n + 1), H(2 * n + 1) + sign(n))),
        ("C_{2n} = A_{4n-3} + P_{4n-2}", 1, lambda n: (C(2 * n), A(4 * n - 3) + P(4 * n - 2))),
        ("C_{2n} = B_{4n-2}", 1, lambda n: (C(2 * n), B(4 * n - 2))),
        ("C_{2n+1} = B_{4n-1} + P_{4n}", 1, lambda n: (C(2 * n + 1), B(4 * n - 1) + P(4 * n))),
        ("C_{2n+1} = A_{4n}", 1, lambda n: (C(2 * n + 1), A(4 * n))),
        ("C_{2n+1} = 6C_{2n} - C_{2n-1} + 4", 1, lambda n: (C(2 * n + 1), 6 * C(2 * n) - C(2 * n - 1) + 4)),
        ("C_{2n} = 6C_{2n-1} - C_{2n-2} - 4", 2, lambda n: (C(2 * n), 6 * C(2 * n - 1) - C(2 * n - 2) - 4)),
    ]


def _d_radical(n: int) -> int:
    k = 2 * n - 2
    s = ZRoot2(3, 4) * zpow(SILVER, k) + ZRoot2(3, -4) * zpow(SILVER_BAR, k) - 2 * sign(n)
    if not s.is_integer():
        raise InvariantError("sqrt2 part in D closed form")
    return s.a


def _problem2() -> list[Identity]:
    return [
        ("D_n = Y_n^2 + 2Y_{n-1}Z_{n-1}", 2, lambda n: (D(n), P(n) ** 2 + 2 * P(n - 1) * H(n - 1))),
        ("D_n = P_n^2 + P_{2n-2}", 1, lambda n: (D(n), P(n) ** 2 + P(2 * n - 2))),
        ("8D_n = (3+4r)(1+r)^{2n-2} + (3-4r)(1-r)^{2n-2} - 2(-1)^n", 1, lambda n: (8 * D(n), _d_radical(n))),
        ("D_{2n} = 6D_{2n-1} - D_{2n-2} - 2", 2, lambda n: (D(2 * n), 6 * D(2 * n - 1) - D(2 * n - 2) - 2)),
        ("D_{2n+1} = 6D_{2n} - D_{2n-1} + 2", 1, lambda n: (D(2 * n + 1), 6 * D(2 * n) - D(2 * n - 1) + 2)),
        # (x^2 - 6x + 1)(x + 1) = x^3 - 5x^2 - 5x + 1
        ("D_n - 5D_{n-1} - 5D_{n-2} + D_{n-3} = 0", 4,
         lambda n: (D(n) - 5 * D(n - 1) - 5 * D(n - 2) + D(n - 3), 0)),
    ]


def _thm6rec() -> list[Identity]:
    return [
        ("h_n = h_{n-1} + 4H_{n-1} + 2p_{n-1} + 4P_{n-1}", 2,
         lambda n: (h(n), h(n - 1) + 4 * H(n - 1) + 2 * p(n - 1) + 4 * P(n - 1))),
        ("q_n = q_{n-1} + 2r_{n-1} + 2P_{n-1}", 2,
         lambda n: (q(n), q(n - 1) + 2 * r(n - 1) + 2 * P(n - 1))),
        ("phi_n = phi_{n-1} + 4H_{n-1} + 2theta_{n-1} + 2P_{n-1}", 2,
         lambda n: (phi(n), phi(n - 1) + 4 * H(n - 1) + 2 * theta(n - 1) + 2 * P(n - 1))),
        ("p_n = h_{n-1} + 3H_{n-1} + p_{n-1} + P_{n-1}", 2,
         lambda n: (p(n), h(n - 1) + 3 * H(n - 1) + p(n - 1) + P(n - 1))),
        ("r_n = q_{n-1} + r_{n-1} + P_{n-1}", 2,
         lambda n: (r(n), q(n - 1) + r(n - 1) + P(n - 1))),
        ("theta_n = phi_{n-1} + 3H_{n-1} + theta_{n-1}", 2,
         lambda n: (theta(n), phi(n - 1) + 3 * H(n - 1) + theta(n - 1))),
        ("h_n = 2h_{n-1} + h_{n-2} + 10P_{n-1}", 3, lambda n: (h(n), 2 * h(n - 1) + h(n - 2) + 10 * P(n - 1))),
        ("p_n = 2p_{n-1} + p_{n-2} + 5H_{n-1}", 3, lambda n: (p(n), 2 * p(n - 1) + p(n - 2) + 5 * H(n - 1))),
        ("q_n = 2q_{n-1} + q_{n-2} + 2P_{n-1}", 3, lambda n: (q(n), 2 * q(n - 1) + q(n - 2) + 2 * P(n - 1))),
        ("r_n = 2r_{n-1} + r_{n-2} + H_{n-1}", 3, lambda n: (r(n), 2 * r(n - 1) + r(n - 2) + H(n - 1))),
        ("phi_n = 2phi_{n-1} + phi_{n-2} + 8P_{n-1}", 3,
         lambda n: (phi(n), 2 * phi(n - 1) + phi(n - 2) + 8 * P(n - 1))),
        ("theta_n = 2theta_{n-1} + theta_{n-2} + 4H_{n-1}", 3,
         lambda n: (theta(n), 2 * theta(n - 1) + theta(n - 2) + 4 * H(n - 1))),
        ("h_n = phi_n + q_n", 1, lambda n: (h(n), phi(n) + q(n))),
        ("p_n = theta_n + r_n", 1, lambda n: (p(n), theta(n) + r(n))),
        ("phi_n + 4q_n = (4n-2)H_n", 1, lambda n: (phi(n) + 4 * q(n), (4 * n - 2) * H(n))),
        ("theta_n + 4r_n = (4n-3)P_n", 1, lambda n: (theta(n) + 4 * r(n), (4 * n - 3) * P(n))),
        ("4h_n = (10n-5)H_n + 3H_{n-1}", 1, lambda n: (4 * h(n), (10 * n - 5) * H(n) + 3 * H(n - 1))),
        ("2p_n = (5n-3)(H_n - P_{n-1})", 1, lambda n: (2 * p(n), (5 * n - 3) * (H(n) - P(n - 1)))),
    ]


def _thm6_as_printed() -> list[Identity]:
    """Rewritten forms of the tile totals as they were printed; all fail."""
    return [
        ("2h_n = (5n+1)H_n - 3H_{n-1}", 2, lambda n: (2 * h(n), (5 * n + 1) * H(n) - 3 * H(n - 1))),
        ("2p_n = (5n-3)(H_n - H_{n-1})", 3, lambda n: (2 * p(n), (5 * n - 3) * (H(n) - H(n - 1)))),
        ("2h_n = 5nH_n + H_n + 3P_n", 1, lambda n: (2 * h(n), 5 * n * H(n) + H(n) + 3 * P(n))),
        ("2p_n = (5n+2)P_n", 1, lambda n: (2 * p(n), (5 * n + 2) * P(n))),
        ("phi_n = 2nH_n + 2P_n", 1, lambda n: (phi(n), 2 * n * H(n) + 2 * P(n))),
        ("theta_n = (2n+1)P_n", 1, lambda n: (theta(n), (2 * n + 1) * P(n))),
    ]


def _closed_vs_rec() -> list[Identity]:
    ids: list[Identity] = []
    for sid in SeqId:
        for route in supported_routes(sid):
            ids.append((f"{sid.value} value = {route.value} route", DOMAIN_START[sid],
                        lambda n, s=sid, rt=route: (seq_value(s, n), seq_value_alt(s, n, rt))))

    def conj_sum(n: int) -> ZRoot2:
        return zpow(SILVER, n) + zpow(SILVER_BAR, n)

    def conj_diff(n: int) -> ZRoot2:
        return zpow(SILVER, n) - zpow(SILVER_BAR, n)

    ids += [
        ("A_n = A_{n-1} + 3A_{n-2} + A_{n-3}", 3, lambda n: (A(n), A(n - 1) + 3 * A(n - 2) + A(n - 3))),
        ("B_n = B_{n-1} + 3B_{n-2} + B_{n-3}", 3, lambda n: (B(n), B(n - 1) + 3 * B(n - 2) + B(n - 3))),
        ("A_n = 2A_{n-1} + A_{n-2} + (-1)^n", 2, lambda n: (A(n), 2 * A(n - 1) + A(n - 2) + sign(n))),
        ("B_n = 2B_{n-1} + B_{n-2} - (-1)^n", 2, lambda n: (B(n), 2 * B(n - 1) + B(n - 2) - sign(n))),
        ("H_n = P_n + P_{n-1}", 1, lambda n: (H(n), P(n) + P(n - 1))),
        ("P_n - P_{n-1} = H_{n-1}", 1, lambda n: (P(n) - P(n - 1), H(n - 1))),
        ("(1+r)^n + (1-r)^n = 2H_n", 0, lambda n: (conj_sum(n), ZRoot2(2 * H(n), 0))),
        ("(1+r)^n - (1-r)^n = 2P_n r", 0, lambda n: (conj_diff(n), ZRoot2(0, 2 * P(n)))),
        ("X_n = Z_{n-1}", 1, lambda n: (seq_value(SeqId.X, n), seq_value(SeqId.Z, n - 1))),
    ]
    return ids


SUITES: dict[str, Callable[[], list[Identity]]] = {
    "thm4": lambda: _thm4(printed_eight=False),
    "thm4-as-printed": lambda: _thm4(printed_eight=True),
    "thm5": _thm5,
    "consequence": _consequence,
    "problem1": _problem1,
    "problem2": _problem2,
    "thm6rec": _thm6rec,
    "closedVsRec": _closed_vs_rec,
    "thm6-as-printed": _thm6_as_printed,
}


def run_suite(suite: str, n_max: int) -> IdentityReport:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    identities = SUITES[suite]()
    report = IdentityReport(suite, min(lo for _, lo, _ in identities), n_max)
    for name, lo, f in identities:
        for n in range(lo, n_max + 1):
            try:
                lhs, rhs = f(n)
            except ArithmeticError as exc:
                lhs, rhs = f"error: {exc}", "exact value"
            report.add(name, n, lhs, rhs)
    return report.sort()


# ---------------------------------------------------------------------------
# oracle cross-validation

_STAT_IDS = {FamilyId.H: ("h", "phi", "q"), FamilyId.P: ("p", "theta", "r")}


def cross_validate(family: FamilyId | str, n_max: int, dfs_max: int = DFS_BUDGET) -> IdentityReport:
    """Tiling-engine counts and statistics against sequence values."""
    family = FamilyId(family)
    if n_max > DP_BUDGET:
        raise ValueError(f"n_max {n_max} exceeds the enumeration budget {DP_BUDGET}")
    report = IdentityReport(f"crossval {family.value}", 1, n_max)
    for n in range(1, n_max + 1):
        cx = build_family(family, n)
        expected = seq_value(family.value, n)
        report.add(f"{family.value}_n DP count", n, count_dp(cx), expected)
        if n <= dfs_max:
            report.add(f"{family.value}_n DFS count", n, count_dfs(cx), expected)
        if family in _STAT_IDS:
            methods = ["dp"] + (["dfs"] if n <= dfs_max else [])
            for method in methods:
                st = stats(cx, method)
                total_id, small_id, large_id = _STAT_IDS[family]
                report.add(f"{total_id}_n = total tiles ({method})", n, st.total_tiles, seq_value(total_id, n))
                report.add(f"{small_id}_n = small tiles ({method})", n, st.small_tiles, seq_value(small_id, n))
                report.add(f"{large_id}_n = large tiles ({method})", n, st.large_tiles, seq_value(large_id, n))
    return report.sort()


# ---------------------------------------------------------------------------
# asymptotics

FOUR_FIFTHS = Fraction(4, 5)
ONE_FIFTH = Fraction(1, 5)


def asymptotic_row(n: int) -> dict[str, Fraction | int]:
    """Exact tile ratios at n with their gaps to 4/5 and 1/5."""
    if n < 2:
        raise ValueError("asymptotics rows need n >= 2")
    hn, pn = h(n), p(n)
    row = {
        "n": n,
        "phiOverH": Fraction(phi(n), hn),
        "qOverH": Fraction(q(n), hn),
        "thetaOverP": Fraction(theta(n), pn),
        "rOverP": Fraction(r(n), pn),
    }
    row["phiGap"] = row["phiOverH"] - FOUR_FIFTHS
    row["qGap"] = row["qOverH"] - ONE_FIFTH
    row["thetaGap"] = row["thetaOverP"] - FOUR_FIFTHS
    row["rGap"] = row["rOverP"] - ONE_FIFTH
    return row


def _asymptotic_checks(n: int) -> list[tuple[str, object, object]]:
    row = asymptotic_row(n)
    hgap = Fraction(2 * H(n - 1), 5 * h(n))
    pgap = Fraction(2, 5 * (5 * n - 3))
    return [
        ("phi_n/h_n - 4/5 = 2H_{n-1}/(5h_n)", row["phiGap"], hgap),
        ("q_n/h_n - 1/5 = -2H_{n-1}/(5h_n)", row["qGap"], -hgap),
        ("theta_n/p_n - 4/5 = 2/(5(5n-3))", row["thetaGap"], pgap),
        ("r_n/p_n - 1/5 = -2/(5(5n-3))", row["rGap"], -pgap),
        ("|phi_n/h_n - 4/5| <= 1/(5n)", abs(row["phiGap"]) <= Fraction(1, 5 * n), True),
    ]


def asymptotics_report(n_list: list[int]) -> list[dict[str, Fraction | int]]:
    rows = []
    for n in n_list:
        for name, lhs, rhs in _asymptotic_checks(n):
            if lhs != rhs:
                raise InvariantError(f"{name} fails at n={n}: {lhs} != {rhs}")
        rows.append(asymptotic_row(n))
    return rows


def run_asymptotics(n_max: int) -> IdentityReport:
    report = IdentityReport("asymptotics", 2, n_max)
    for n in range(2, n_max + 1):
        for name, lhs, rhs in _asymptotic_checks(n):
            report.add(name, n, lhs, rhs)
    return report.sort()


# ---------------------------------------------------------------------------

ALL_SUITES = ("thm4", "thm5", "consequence", "problem1", "problem2", "thm6rec", "closedVsRec")


def run_all(n_max: int, oracle_max: int = 10) -> IdentityReport:
    """Every corrected suite, asymptotics, fixtures and oracle cross-checks."""
    reports = [run_suite(s, n_max) for s in ALL_SUITES]
    reports.append(run_asymptotics(n_max))
    reports.append(check_shipped())
    reports.extend(cross_validate(f, oracle_max, dfs_max=oracle_max) for f in FamilyId)
    return merge("all", reports)
