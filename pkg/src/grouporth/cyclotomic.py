"""Exact arithmetic in Z[z], z a primitive q-th root of unity.

An element is stored as the length-q coefficient vector of a polynomial in z
(reduced mod z^q - 1).  It is zero exactly when that polynomial is divisible
by the q-th cyclotomic polynomial, which is decided by integer polynomial
division, never by floating point.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

# Polynomials are tuples of integer coefficients, lowest degree first.


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_divmod(num, den) -> tuple[list[int], list[int]]:
    """Quotient and remainder of integer polynomials; ``den`` must be monic."""
    num = _trim(list(num))
    den = _trim(list(den))
    if not den or den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = num[:]
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return [], rem
    quot = [0] * (len(rem) - dd)
    for shift in range(len(rem) - 1 - dd, -1, -1):
        c = rem[shift + dd]
        if c:
            quot[shift] = c
            for i, d in enumerate(den):
                rem[shift + i] -= c * d
    return _trim(quot), _trim(rem[:dd])


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q: int) -> tuple[int, ...]:
    """Phi_q, obtained by dividing x^q - 1 by Phi_d for every proper divisor d."""
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    p = [-1] + [0] * (q - 1) + [1]
    for d in _divisors(q)[:-1]:
        p, r = poly_divmod(p, cyclotomic_polynomial(d))
        if r:
            raise ArithmeticError(f"Phi_{d} does not divide x^{q}-1")  # unreachable
    return tuple(p)


@dataclass(frozen=True)
class CyclotomicInt:
    q: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be positive")
        if len(self.coeffs) != self.q:
            raise ValueError(f"need {self.q} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, q: int) -> CyclotomicInt:
        return cls(q, (0,) * q)

    @classmethod
    def integer(cls, q: int, n: int) -> CyclotomicInt:
        return cls(q, (n,) + (0,) * (q - 1))

    @classmethod
    def root(cls, q: int, k: int) -> CyclotomicInt:
        c = [0] * q
        c[k % q] = 1
        return cls(q, tuple(c))

    @classmethod
    def from_exponents(cls, q: int, exponents) -> CyclotomicInt:
        """Sum of z^k over the given exponents."""
        c = [0] * q
        for k in exponents:
            c[k % q] += 1
        return cls(q, tuple(c))

    def _check(self, other: CyclotomicInt) -> None:
        if self.q != other.q:
            raise ValueError(f"mixed root orders {self.q} and {other.q}")

    def __add__(self, other: CyclotomicInt) -> CyclotomicInt:
        self._check(other)
        return CyclotomicInt(self.q, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CyclotomicInt) -> CyclotomicInt:
        self._check(other)
        return CyclotomicInt(self.q, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self.q, tuple(-a for a in self.coeffs))

    def __mul__(self, other: CyclotomicInt) -> CyclotomicInt:
        self._check(other)
        q = self.q
        out = [0] * q
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % q] += a * b
        return CyclotomicInt(q, tuple(out))

    def conj(self) -> CyclotomicInt:
        q = self.q
        return CyclotomicInt(q, tuple(self.coeffs[(-k) % q] for k in range(q)))

    def reduced(self) -> tuple[int, ...]:
        """Remainder of the coefficient polynomial modulo Phi_q."""
        _, r = poly_divmod(self.coeffs, cyclotomic_polynomial(self.q))
        return tuple(r)

    def is_zero(self) -> bool:
        return cyclo_zero_test(self)

    def as_integer(self) -> int | None:
        """The rational integer this equals, if it is one."""
        r = self.reduced()
        if len(r) <= 1:
            return r[0] if r else 0
        return None

    def __complex__(self) -> complex:
        return sum(c * cmath.exp(2j * cmath.pi * k / self.q) for k, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        return " + ".join(terms) if terms else "0"


def cyclo_zero_test(x: CyclotomicInt) -> bool:
    """True iff the element is the zero algebraic number."""
    return not x.reduced()
