"""Classical real Hadamard matrices used as Table witnesses.

Sylvester doubling gives orders 2^m.  The Paley constructions give q + 1
(q = 3 mod 4) and 2(q + 1) (q = 1 mod 4) for a prime power q; the field of
order p^2 is realized as GF(p)[x]/(x^2 - r) with r a quadratic nonresidue.
Matrices come back over roots2, so -1 is the group element of order 2.
"""

from __future__ import annotations

import numpy as np

from .gmatrix import GMatrix, MatrixError, _is_prime, primitive_root
from .groups import make_group


def sylvester(order: int) -> GMatrix:
    if order < 1 or order & (order - 1):
        raise MatrixError(f"Sylvester order must be a power of 2, got {order}")
    H = np.ones((1, 1), dtype=np.int64)
    while len(H) < order:
        H = np.block([[H, H], [H, -H]])
    return from_signs(H)


def from_signs(S) -> GMatrix:
    """+-1 array -> roots2 GMatrix."""
    S = np.asarray(S)
    if not np.isin(S, (1, -1)).all():
        raise MatrixError("entries must be +1 or -1")
    return GMatrix(make_group("roots2"), (S == -1).astype(np.int64).tolist())


class _Field:
    """GF(q) for q = p or p^2; elements are integers a + p*b for a + b*x."""

    def __init__(self, q: int):
        for p in range(2, q + 1):
            if _is_prime(p) and q % p == 0:
                break
        if q == p:
            self.p, self.deg = p, 1
        elif q == p * p:
            self.p, self.deg = p, 2
            # least nonresidue: x^2 - r is irreducible
            self.r = next(r for r in range(2, p) if pow(r, (p - 1) // 2, p) == p - 1)
        else:
            raise MatrixError(f"field order {q} is not p or p^2")
        if self.p == 2:
            raise MatrixError("Paley constructions need odd q")
        self.q = q

    def split(self, z):
        return z % self.p, z // self.p

    def sub(self, u, v):
        p = self.p
        (a, b), (c, d) = self.split(u), self.split(v)
        return (a - c) % p + p * ((b - d) % p)

    def mul(self, u, v):
        p = self.p
        (a, b), (c, d) = self.split(u), self.split(v)
        if self.deg == 1:
            return a * c % p
        return (a * c + b * d * self.r) % p + p * ((a * d + b * c) % p)

    def chi(self, z) -> int:
        """Quadratic character."""
        if z == 0:
            return 0
        e, acc, base = (self.q - 1) // 2, 1, z
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return 1 if acc == 1 else -1


def jacobsthal(q: int) -> np.ndarray:
    F = _Field(q)
    return np.array([[F.chi(F.sub(j, i)) for j in range(q)] for i in range(q)], dtype=np.int64)


def paley1(q: int) -> GMatrix:
    """Order q + 1 for q = 3 mod 4."""
    if q % 4 != 3:
        raise MatrixError(f"Paley I needs q = 3 mod 4, got {q}")
    Q = jacobsthal(q)
    one = np.ones((q, 1), dtype=np.int64)
    S = np.block([[np.zeros((1, 1), np.int64), one.T], [-one, Q]])
    return from_signs(S + np.eye(q + 1, dtype=np.int64))


def paley2(q: int) -> GMatrix:
    """Order 2(q + 1) for q = 1 mod 4."""
    if q % 4 != 1:
        raise MatrixError(f"Paley II needs q = 1 mod 4, got {q}")
    Q = jacobsthal(q)
    one = np.ones((q, 1), dtype=np.int64)
    C = np.block([[np.zeros((1, 1), np.int64), one.T], [one, Q]])
    I = np.eye(q + 1, dtype=np.int64)
    return from_signs(np.kron(C, [[1, 1], [1, -1]]) + np.kron(I, [[1, -1], [-1, -1]]))


def hadamard(order: int) -> GMatrix:
    """A real Hadamard matrix from Sylvester or one Paley step (times a power of 2)."""
    if order in (1, 2) or (order & (order - 1)) == 0:
        return sylvester(order)
    m = order
    twos = 1
    while m % 2 == 0:
        for q, build in ((m - 1, paley1), (m // 2 - 1, paley2)):
            if q > 2 and q % 4 == (3 if build is paley1 else 1) and _prime_power_ok(q):
                H = build(q)
                return H if twos == 1 else _kron_signs(sylvester(twos), H)
        m //= 2
        twos *= 2
    raise MatrixError(f"no Sylvester/Paley recipe for order {order}")


def _prime_power_ok(q: int) -> bool:
    try:
        _Field(q)
    except MatrixError:
        return False
    return True


def _kron_signs(A: GMatrix, B: GMatrix) -> GMatrix:
    a = 1 - 2 * A.array
    b = 1 - 2 * B.array
    return from_signs(np.kron(a, b))


__all__ = ["sylvester", "paley1", "paley2", "hadamard", "jacobsthal", "from_signs", "primitive_root"]
