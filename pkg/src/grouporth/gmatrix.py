"""Matrices whose entries are group elements, the design-zero, or a wildcard."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

import numpy as np

from .groups import WILDCARD, ZERO, Group, GroupError, make_group


class MatrixError(ValueError):
    """Ill-formed matrix or incompatible combinator inputs."""


@dataclass(frozen=True)
class GMatrix:
    group: Group
    entries: tuple[tuple[int, ...], ...]
    semantics: str = field(default="", compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if not self.semantics:
            object.__setattr__(self, "semantics", self.group.default_semantics)
        if not rows or not rows[0]:
            raise MatrixError("matrix must have at least one row and one column")
        b = len(rows[0])
        n = self.group.order
        for i, r in enumerate(rows):
            if len(r) != b:
                raise MatrixError(f"row {i} has {len(r)} entries, expected {b}")
            for x in r:
                if not (x in (ZERO, WILDCARD) or 0 <= x < n):
                    raise MatrixError(f"entry {x} in row {i} is not an element of {self.group}")

    @classmethod
    def from_tokens(cls, group, rows, semantics: str = "") -> GMatrix:
        group = make_group(group)
        return cls(group, tuple(tuple(group.parse(t) if isinstance(t, str) else int(t) for t in r) for r in rows), semantics)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.entries, dtype=np.int64)
        a.setflags(write=False)
        return a

    @property
    def has_zeros(self) -> bool:
        return bool((self.array == ZERO).any())

    @property
    def has_wildcards(self) -> bool:
        return bool((self.array == WILDCARD).any())

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def tokens(self) -> list[list[str]]:
        return [[self.group.format(x) for x in r] for r in self.entries]

    def __str__(self) -> str:
        toks = self.tokens()
        width = max(len(t) for r in toks for t in r)
        return "\n".join(" ".join(t.rjust(width) for t in r) for r in toks)

    def with_entries(self, entries) -> GMatrix:
        return GMatrix(self.group, entries, self.semantics)

    def transpose(self) -> GMatrix:
        return self.with_entries(zip(*self.entries))

    def permute_rows(self, perm) -> GMatrix:
        return self.with_entries(self.entries[p] for p in perm)

    def permute_cols(self, perm) -> GMatrix:
        return self.with_entries(tuple(r[p] for p in perm) for r in self.entries)

    def scale_row(self, i: int, g: int, side: str = "left") -> GMatrix:
        """Multiply every nonzero entry of row ``i`` by ``g`` on the given side."""
        G = self.group
        rows = [list(r) for r in self.entries]
        rows[i] = [x if x < 0 else (G.mul(g, x) if side == "left" else G.mul(x, g)) for x in rows[i]]
        return self.with_entries(rows)

    def flatten(self) -> np.ndarray:
        """0/1 incidence pattern: 1 where a group element sits, 0 at design-zeros."""
        if self.has_wildcards:
            raise MatrixError("cannot flatten a matrix with wildcards")
        return (self.array >= 0).astype(np.int64)


def circulant(group, first_row) -> GMatrix:
    """Square matrix with row i equal to ``first_row`` shifted right by i."""
    group = make_group(group)
    row = [group.parse(t) if isinstance(t, str) else int(t) for t in first_row]
    n = len(row)
    if n == 0:
        raise MatrixError("circulant needs a nonempty first row")
    return GMatrix(group, tuple(tuple(row[(j - i) % n] for j in range(n)) for i in range(n)))


def back_circulant(group, first_row) -> GMatrix:
    """Square matrix with entry (i, j) = first_row[(i + j) mod n]."""
    group = make_group(group)
    row = [group.parse(t) if isinstance(t, str) else int(t) for t in first_row]
    n = len(row)
    if n == 0:
        raise MatrixError("back-circulant needs a nonempty first row")
    return GMatrix(group, tuple(tuple(row[(i + j) % n] for j in range(n)) for i in range(n)))


def block_grid(blocks) -> GMatrix:
    """Concatenate an r x c grid of matrices over one group."""
    blocks = [list(r) for r in blocks]
    if not blocks or not blocks[0]:
        raise MatrixError("empty block grid")
    group = blocks[0][0].group
    ncols = len(blocks[0])
    widths = [b.cols for b in blocks[0]]
    out = []
    for bi, brow in enumerate(blocks):
        if len(brow) != ncols:
            raise MatrixError(f"block row {bi} has {len(brow)} blocks, expected {ncols}")
        height = brow[0].rows
        for bj, blk in enumerate(brow):
            if blk.group != group:
                raise MatrixError(f"block ({bi},{bj}) is over {blk.group}, expected {group}")
            if blk.rows != height or blk.cols != widths[bj]:
                raise MatrixError(f"block ({bi},{bj}) has shape {blk.shape}, tiling needs ({height}, {widths[bj]})")
        for i in range(height):
            out.append(sum((blk.entries[i] for blk in brow), ()))
    return GMatrix(group, out, blocks[0][0].semantics)


def embed(M: GMatrix, target) -> GMatrix:
    """Re-express a cyclic/roots matrix inside a cyclic/roots group of multiple order.

    Residue k of an order-m group maps to k * (n/m) in the order-n target, so a
    +-1 matrix (roots2) lands on exponents 0 and n/2.
    """
    target = make_group(target)
    src = M.group
    if src == target:
        return M
    if not (src.is_cyclic_kind and target.is_cyclic_kind):
        raise MatrixError(f"cannot embed {src} into {target}")
    m, n = src.order, target.order
    if n % m:
        raise MatrixError(f"{src} does not embed in {target}: {m} does not divide {n}")
    s = n // m
    return GMatrix(target, tuple(tuple(x if x < 0 else x * s for x in r) for r in M.entries))


def _common_group(A: GMatrix, B: GMatrix) -> tuple[GMatrix, GMatrix]:
    if A.group == B.group:
        return A, B
    ga, gb = A.group, B.group
    if ga.is_cyclic_kind and gb.is_cyclic_kind:
        if ga.order % gb.order == 0:
            return A, embed(B, ga)
        if gb.order % ga.order == 0:
            return embed(A, gb), B
        lcm = ga.order * gb.order // gcd(ga.order, gb.order)
        kind = "roots" if "roots" in (ga.kind, gb.kind) else "cyclic"
        target = Group(kind, (lcm,))
        return embed(A, target), embed(B, target)
    raise MatrixError(f"incompatible groups {ga} and {gb}")


def kronecker_compose(A: GMatrix, B: GMatrix) -> GMatrix:
    """Kronecker product with entry [(i1,i2),(j1,j2)] = A[i1,j1] * B[i2,j2]."""
    for M in (A, B):
        if M.has_zeros or M.has_wildcards:
            raise MatrixError("Kronecker composition needs matrices without zeros or wildcards")
    A, B = _common_group(A, B)
    mul = A.group.mul_table
    a, b = A.array, B.array
    out = mul[a[:, None, :, None], b[None, :, None, :]]
    return GMatrix(A.group, out.reshape(A.rows * B.rows, A.cols * B.cols).tolist())


ADJOINT_KINDS = ("plain", "group-inverse", "complex-conjugate", "quaternion-conjugate")


def adjoint(M: GMatrix, kind: str = "group-inverse") -> GMatrix:
    """Transpose with the kind's elementwise involution applied.

    For roots of unity complex conjugation is inversion; for Q8 the quaternion
    conjugate of a unit is its inverse.  Zeros and wildcards are kept.
    """
    G = M.group
    if kind == "plain":
        return M.transpose()
    if kind == "complex-conjugate" and G.kind not in ("roots", "cyclic"):
        raise MatrixError(f"complex conjugation is undefined on {G}")
    if kind == "quaternion-conjugate" and G.kind != "q8":
        raise MatrixError(f"quaternion conjugation needs q8 entries, got {G}")
    if kind not in ADJOINT_KINDS:
        raise MatrixError(f"unknown adjoint kind {kind!r}")
    inv = G.inv_table
    return M.with_entries(tuple(x if x < 0 else int(inv[x]) for x in col) for col in zip(*M.entries))


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def primitive_root(p: int) -> int:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    factors = {d for d in range(2, p) if (p - 1) % d == 0 and _is_prime(d)}
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise ArithmeticError("no primitive root")  # unreachable for primes


def residue_classes(p: int, e: int = 3) -> list[list[int]]:
    """Cosets C_0..C_{e-1} of the e-th powers in the multiplicative group mod p.

    C_0 holds the e-th power residues and C_i = g^i C_0 for the least
    primitive root g.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if (p - 1) % e:
        raise ValueError(f"residue classes of order {e} need p = 1 mod {e}, got p={p}")
    g = primitive_root(p)
    return [sorted(pow(g, i + e * t, p) for t in range((p - 1) // e)) for i in range(e)]


def residue_class_matrix(p: int, coeff_map: dict, group, e: int = 3) -> GMatrix:
    """p x p matrix with entry (i, j) set by the class of (j - i) mod p.

    ``coeff_map`` maps ``"I"`` (the diagonal) and ``"C0"``.. ``"C{e-1}"`` to
    entries; a missing class key puts design-zeros on that class.
    """
    group = make_group(group)
    classes = residue_classes(p, e)
    cls_of = {}
    for i, C in enumerate(classes):
        for r in C:
            cls_of[r] = f"C{i}"

    def entry(key):
        v = coeff_map.get(key, ZERO)
        return group.parse(v) if isinstance(v, str) else int(v)

    vals = {key: entry(key) for key in ["I", *cls_of.values()]}
    first = [vals["I"]] + [vals[cls_of[d]] for d in range(1, p)]
    return circulant(group, first)


def all_identity(group, rows: int, cols: int | None = None) -> GMatrix:
    group = make_group(group)
    return GMatrix(group, ((0,) * (rows if cols is None else cols),) * rows)


def require_group(M: GMatrix, *kinds: str) -> None:
    if M.group.kind not in kinds:
        raise GroupError(f"expected a matrix over {' or '.join(kinds)}, got {M.group}")
