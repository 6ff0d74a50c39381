"""Exact values of the strip-tiling sequences.

Primary values come from the integer Pell pair ``(P_n, H_n)`` maintained by
``x_n = 2 x_{n-1} + x_{n-2}``. Every other sequence is a formula in that
pair. Alternative routes (other recurrences, radical closed forms over
Z[sqrt 2], generating-function expansion, bisection recurrences) exist to
check the primary values, and never feed back into them.

Sequence ids::

    P, H           Pell numbers and half-companion Pell numbers (A001333)
    X, Y, Z        X_n = H_{n-1}, Y_n = P_n, Z_n = H_n
    A, B           (H_{n+1} +- (-1)^n) / 2
    C, D           H_{n-1}^2 + P_{2n-2},  P_n^2 + P_{2n-2}
    h, phi, q      total / small / large tiles over all tilings of H_n
    p, theta, r    total / small / large tiles over all tilings of P_n
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Sequence

from .errors import CapabilityError, DomainError, InvariantError
from .zroot2 import SILVER, SILVER_BAR, ZRoot2, zpow


class SeqId(str, enum.Enum):
    P = "P"
    H = "H"
    X = "X"
    Y = "Y"
    Z = "Z"
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    h = "h"
    p = "p"
    q = "q"
    r = "r"
    phi = "phi"
    theta = "theta"


class Route(str, enum.Enum):
    RECURRENCE = "recurrence"
    CLOSED_FORM = "closedForm"
    GF = "gf"
    BISECTION = "bisection"


# lowest valid index per sequence
DOMAIN_START = {
    SeqId.P: 0, SeqId.H: 0, SeqId.A: 0, SeqId.B: 0, SeqId.Y: 0, SeqId.Z: 0,
    SeqId.X: 1, SeqId.C: 1, SeqId.D: 1,
    SeqId.h: 1, SeqId.p: 1, SeqId.q: 1, SeqId.r: 1, SeqId.phi: 1, SeqId.theta: 1,
}


def exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise InvariantError(f"{num} is not divisible by {den}")
    return q


def sign(n: int) -> int:
    """(-1)^n"""
    return -1 if n & 1 else 1


# ---------------------------------------------------------------------------
# Pell pair

class _PellTable:
    """Shared, lock-guarded prefix of (P_n, H_n); long runs are not stored."""

    LIMIT = 1 << 13

    def __init__(self) -> None:
        self._p = [0, 1]
        self._h = [1, 1]
        self._lock = threading.Lock()

    def pair(self, n: int) -> tuple[int, int]:
        if n < 0:
            raise DomainError(f"index must be >= 0, got {n}")
        if n < len(self._p):
            return self._p[n], self._h[n]
        with self._lock:
            while len(self._p) <= min(n, self.LIMIT):
                self._p.append(2 * self._p[-1] + self._p[-2])
                self._h.append(2 * self._h[-1] + self._h[-2])
            if n < len(self._p):
                return self._p[n], self._h[n]
            top = len(self._p) - 1
            p0, p1 = self._p[-2], self._p[-1]
            h0, h1 = self._h[-2], self._h[-1]
        for _ in range(n - top):
            p0, p1 = p1, 2 * p1 + p0
            h0, h1 = h1, 2 * h1 + h0
        return p1, h1


_PELL = _PellTable()


def pell(n: int) -> int:
    return _PELL.pair(n)[0]


def half_companion(n: int) -> int:
    return _PELL.pair(n)[1]


def pell_h_recurrence(n: int) -> tuple[int, int]:
    """(P_n, H_n) by a fresh, unshared recurrence loop."""
    if n < 0:
        raise DomainError(f"index must be >= 0, got {n}")
    p0, p1, h0, h1 = 0, 1, 1, 1
    if n == 0:
        return p0, h0
    for _ in range(n - 1):
        p0, p1 = p1, 2 * p1 + p0
        h0, h1 = h1, 2 * h1 + h0
    return p1, h1


# ---------------------------------------------------------------------------
# primary values

def _check_domain(sid: SeqId, n: int) -> None:
    if n < DOMAIN_START[sid]:
        raise DomainError(f"{sid.value}_n is defined for n >= {DOMAIN_START[sid]}, got {n}")


def seq_value(sid: SeqId | str, n: int) -> int:
    sid = SeqId(sid)
    _check_domain(sid, n)
    P, H = pell, half_companion
    if sid in (SeqId.P, SeqId.Y):
        return P(n)
    if sid in (SeqId.H, SeqId.Z):
        return H(n)
    if sid is SeqId.X:
        return H(n - 1)
    if sid is SeqId.A:
        return exact_div(H(n + 1) + sign(n), 2)
    if sid is SeqId.B:
        return exact_div(H(n + 1) - sign(n), 2)
    if sid is SeqId.C:
        return H(n - 1) ** 2 + P(2 * n - 2)
    if sid is SeqId.D:
        return P(n) ** 2 + P(2 * n - 2)
    if sid is SeqId.h:
        return exact_div((5 * n - 4) * H(n) + 3 * P(n), 2)
    if sid is SeqId.p:
        return exact_div((5 * n - 3) * P(n), 2)
    if sid is SeqId.q:
        return exact_div(n * H(n) - P(n), 2)
    if sid is SeqId.r:
        return exact_div((n - 1) * P(n), 2)
    if sid is SeqId.phi:
        return 2 * (n - 1) * H(n) + 2 * P(n)
    return (2 * n - 1) * P(n)


def seq_values(sid: SeqId | str, start: int, stop: int) -> list[int]:
    """Values for ``start <= n <= stop``."""
    return [seq_value(sid, n) for n in range(start, stop + 1)]


# ---------------------------------------------------------------------------
# generating functions

@dataclass(frozen=True)
class RationalGF:
    """Power series num(x)/den(x); coefficient lists in ascending powers."""

    num: tuple[int, ...]
    den: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.den or self.den[0] not in (1, -1):
            raise ValueError("denominator constant term must be +1 or -1")

    def normalized(self) -> RationalGF:
        if self.den[0] == 1:
            return self
        return RationalGF(tuple(-c for c in self.num), tuple(-c for c in self.den))


def gf_expand(gf: RationalGF, terms: int) -> list[int]:
    """First ``terms`` coefficients of the series."""
    if terms < 0:
        raise ValueError("terms must be >= 0")
    gf = gf.normalized()
    num, den = gf.num, gf.den
    out: list[int] = []
    for k in range(terms):
        c = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            c -= den[j] * out[k - j]
        out.append(c)
    return out


GF = {
    SeqId.H: RationalGF((1, -1), (1, -2, -1)),
    SeqId.P: RationalGF((0, 1), (1, -2, -1)),
    SeqId.A: RationalGF((1,), (1, -1, -3, -1)),
    SeqId.B: RationalGF((0, 2, 1), (1, -1, -3, -1)),
}


# ---------------------------------------------------------------------------
# linear recurrences

@dataclass(frozen=True)
class Inhom:
    """Inhomogeneous term of a linear recurrence evaluated at index n.

    kind is one of ``zero``, ``const`` (c), ``sign`` (c * (-1)^n),
    ``P`` (c * P_{n-1}) or ``H`` (c * H_{n-1}).
    """

    kind: str = "zero"
    c: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("zero", "const", "sign", "P", "H"):
            raise ValueError(f"unknown inhomogeneous term {self.kind!r}")

    def at(self, n: int) -> int:
        if self.kind == "zero":
            return 0
        if self.kind == "const":
            return self.c
        if self.kind == "sign":
            return self.c * sign(n)
        if self.kind == "P":
            return self.c * pell(n - 1)
        return self.c * half_companion(n - 1)


ZERO = Inhom()


def lin_rec(coeffs: Sequence[int], initials: Sequence[int], inhom: Inhom, n: int, start: int = 0) -> int:
    """n-th term of t_m = sum_j coeffs[j] * t_{m-1-j} + inhom(m).

    ``initials`` are the terms at indices ``start, start+1, ...``.
    """
    if len(initials) != len(coeffs):
        raise ValueError("need exactly one initial value per coefficient")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n < start:
        raise DomainError(f"recurrence starts at {start}, got {n}")
    k = len(coeffs)
    if n < start + k:
        return initials[n - start]
    window = list(initials)
    for m in range(start + k, n + 1):
        t = sum(c * window[-1 - j] for j, c in enumerate(coeffs)) + inhom.at(m)
        window.append(t)
        window.pop(0)
    return window[-1]


# second-order forms of the tile-count sequences, from their n = 1, 2 values
_TILE_RECURRENCES = {
    SeqId.h: ((2, 1), (2, 12), Inhom("P", 10)),
    SeqId.p: ((2, 1), (1, 7), Inhom("H", 5)),
    SeqId.q: ((2, 1), (0, 2), Inhom("P", 2)),
    SeqId.r: ((2, 1), (0, 1), Inhom("H", 1)),
    SeqId.phi: ((2, 1), (2, 10), Inhom("P", 8)),
    SeqId.theta: ((2, 1), (1, 6), Inhom("H", 4)),
}


def _coupled_yz(n: int) -> tuple[int, int]:
    """(Y_n, Z_n) from Z_n = Z_{n-1} + 2 Y_{n-1}, Y_n = Z_{n-1} + Y_{n-1}."""
    y, z = 0, 1
    for _ in range(n):
        y, z = z + y, z + 2 * y
    return y, z


def _by_recurrence(sid: SeqId, n: int) -> int:
    if sid is SeqId.P:
        return lin_rec((2, 1), (0, 1), ZERO, n)
    if sid is SeqId.H:
        return lin_rec((2, 1), (1, 1), ZERO, n)
    if sid is SeqId.Y:
        return _coupled_yz(n)[0]
    if sid is SeqId.Z:
        return _coupled_yz(n)[1]
    if sid is SeqId.X:
        # Y_n = Y_{n-1} + X_n
        return _coupled_yz(n)[0] - _coupled_yz(n - 1)[0]
    if sid is SeqId.A:
        return lin_rec((2, 1), (1, 1), Inhom("sign", 1), n)
    if sid is SeqId.B:
        return lin_rec((2, 1), (0, 2), Inhom("sign", -1), n)
    if sid is SeqId.C:
        # +4 at odd index, -4 at even index
        return lin_rec((6, -1), (1, 3), Inhom("sign", -4), n, start=1)
    if sid is SeqId.D:
        return lin_rec((6, -1), (1, 6), Inhom("sign", -2), n, start=1)
    coeffs, initials, inhom = _TILE_RECURRENCES[sid]
    return lin_rec(coeffs, initials, inhom, n, start=1)


def _conj_sum(n: int) -> int:
    s = zpow(SILVER, n) + zpow(SILVER_BAR, n)
    if not s.is_integer():
        raise InvariantError("conjugate sum has a sqrt2 part")
    return s.a


def _conj_diff_over_root2(n: int) -> int:
    d = zpow(SILVER, n) - zpow(SILVER_BAR, n)
    if d.a:
        raise InvariantError("conjugate difference has a rational part")
    return d.b


def _by_closed_form(sid: SeqId, n: int) -> int:
    if sid is SeqId.H:
        return exact_div(_conj_sum(n), 2)
    if sid is SeqId.P:
        # ((1+r)^n - (1-r)^n) / (2 r) with r = sqrt 2
        return exact_div(_conj_diff_over_root2(n), 2)
    if sid is SeqId.A:
        return exact_div(_conj_sum(n + 1) + 2 * sign(n), 4)
    if sid is SeqId.B:
        return exact_div(_conj_sum(n + 1) - 2 * sign(n), 4)
    if sid is SeqId.C:
        # C_{m+1} = ((1+r)^{2m+1} + (1-r)^{2m+1}) / 4 + (-1)^m / 2
        m = n - 1
        return exact_div(_conj_sum(2 * m + 1) + 2 * sign(m), 4)
    if sid is SeqId.D:
        k = 2 * n - 2
        s = ZRoot2(3, 4) * zpow(SILVER, k) + ZRoot2(3, -4) * zpow(SILVER_BAR, k)
        if not s.is_integer():
            raise InvariantError("D closed form has a sqrt2 part")
        return exact_div(s.a - 2 * sign(n), 8)
    if sid is SeqId.h:
        # 3/(4r) d_n - s_n + (5/4) n s_n, with d_n = (1+r)^n - (1-r)^n, s_n the sum
        d, s = _conj_diff_over_root2(n), _conj_sum(n)
        return exact_div(3 * d - 4 * s + 5 * n * s, 4)
    if sid is SeqId.q:
        return exact_div(-_conj_diff_over_root2(n) + n * _conj_sum(n), 4)
    raise CapabilityError(f"no closed form route for {sid.value}")


def _by_gf(sid: SeqId, n: int) -> int:
    if sid not in GF:
        raise CapabilityError(f"no generating function route for {sid.value}")
    return gf_expand(GF[sid], n + 1)[n]


# (step constant, bases at the two smallest indices of that parity)
_BISECTIONS = {
    SeqId.A: {0: (-2, 1, 4), 1: (2, 1, 8)},
    SeqId.B: {0: (2, 0, 3), 1: (-2, 2, 9)},
}
# C and D: every-second-term recurrences t_m = 34 t_{m-2} - t_{m-4} + c
_BISECTIONS_34 = {
    SeqId.C: {0: (16, 3, 119), 1: (-16, 1, 21)},
    SeqId.D: {0: (8, 6, 214), 1: (-8, 1, 37)},
}


def _by_bisection(sid: SeqId, n: int) -> int:
    if sid in _BISECTIONS:
        mult, table, first = 6, _BISECTIONS[sid], {0: 0, 1: 1}
    elif sid in _BISECTIONS_34:
        mult, table, first = 34, _BISECTIONS_34[sid], {0: 2, 1: 1}
    else:
        raise CapabilityError(f"no bisection route for {sid.value}")
    parity = n & 1
    c, t0, t1 = table[parity]
    k = (n - first[parity]) // 2
    if k == 0:
        return t0
    for _ in range(k - 1):
        t0, t1 = t1, mult * t1 - t0 + c
    return t1


ROUTES = {
    Route.RECURRENCE: frozenset(SeqId),
    Route.CLOSED_FORM: frozenset({SeqId.P, SeqId.H, SeqId.A, SeqId.B, SeqId.C, SeqId.D, SeqId.h, SeqId.q}),
    Route.GF: frozenset(GF),
    Route.BISECTION: frozenset({SeqId.A, SeqId.B, SeqId.C, SeqId.D}),
}


def supported_routes(sid: SeqId | str) -> list[Route]:
    sid = SeqId(sid)
    return [route for route in Route if sid in ROUTES[route]]


def seq_value_alt(sid: SeqId | str, n: int, route: Route | str) -> int:
    sid, route = SeqId(sid), Route(route)
    if sid not in ROUTES[route]:
        raise CapabilityError(f"route {route.value} is not available for {sid.value}")
    _check_domain(sid, n)
    if route is Route.RECURRENCE:
        return _by_recurrence(sid, n)
    if route is Route.CLOSED_FORM:
        return _by_closed_form(sid, n)
    if route is Route.GF:
        return _by_gf(sid, n)
    return _by_bisection(sid, n)
