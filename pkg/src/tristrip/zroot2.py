"""Exact arithmetic in the ring Z[sqrt 2]."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ZRoot2:
    """The number ``a + b*sqrt(2)`` with integer ``a``, ``b``."""

    a: int
    b: int = 0

    @classmethod
    def coerce(cls, x: int | ZRoot2) -> ZRoot2:
        if isinstance(x, ZRoot2):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to ZRoot2")

    def __add__(self, other: int | ZRoot2) -> ZRoot2:
        o = ZRoot2.coerce(other)
        return ZRoot2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> ZRoot2:
        return ZRoot2(-self.a, -self.b)

    def __sub__(self, other: int | ZRoot2) -> ZRoot2:
        return self + (-ZRoot2.coerce(other))

    def __rsub__(self, other: int | ZRoot2) -> ZRoot2:
        return ZRoot2.coerce(other) - self

    def __mul__(self, other: int | ZRoot2) -> ZRoot2:
        o = ZRoot2.coerce(other)
        return ZRoot2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> ZRoot2:
        return zpow(self, n)

    def conjugate(self) -> ZRoot2:
        return ZRoot2(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a - 2 * self.b * self.b

    def is_integer(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}√2"


ONE = ZRoot2(1, 0)
SQRT2 = ZRoot2(0, 1)
SILVER = ZRoot2(1, 1)  # 1 + sqrt 2
SILVER_BAR = ZRoot2(1, -1)


def zpow(base: ZRoot2, n: int) -> ZRoot2:
    if n < 0:
        raise ValueError("negative exponent")
    result = ONE
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result
