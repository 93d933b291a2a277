"""Exact quaternions over the integers (or rationals)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

Number = int | Fraction


@dataclass(frozen=True)
class Quaternion:
    """``a + b i + c j + d k`` with exact components.

    Complex numbers embed as ``a + b i`` and reals as ``a``; the quaternion
    conjugate then restricts to complex conjugation and to the identity.
    """

    a: Number = 0
    b: Number = 0
    c: Number = 0
    d: Number = 0

    @classmethod
    def coerce(cls, x) -> Quaternion:
        if isinstance(x, Quaternion):
            return x
        if isinstance(x, complex):
            re, im = x.real, x.imag
            if re != int(re) or im != int(im):
                raise ValueError(f"complex entry {x!r} is not a Gaussian integer")
            return cls(int(re), int(im))
        if isinstance(x, (int, Rational)):
            return cls(x)
        raise TypeError(f"cannot read {x!r} as an exact quaternion")

    def __add__(self, o: Quaternion) -> Quaternion:
        return Quaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: Quaternion) -> Quaternion:
        return Quaternion(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o: Quaternion) -> Quaternion:
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def conj(self) -> Quaternion:
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm2(self) -> Number:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    @property
    def is_real(self) -> bool:
        return not (self.b or self.c or self.d)

    @property
    def is_complex(self) -> bool:
        return not (self.c or self.d)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for coef, unit in ((self.a, ""), (self.b, "i"), (self.c, "j"), (self.d, "k")):
            if not coef:
                continue
            mag = abs(coef)
            body = unit if (mag == 1 and unit) else f"{mag}{unit}"
            parts.append(("-" if coef < 0 else "+") + body)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


def quat_mul(x: Quaternion, y: Quaternion, conjugate_y: bool = False) -> Quaternion:
    """Hamilton product ``x*y``, or ``x*conj(y)`` when flagged."""
    return x * (y.conj() if conjugate_y else y)
