"""Finite groups with integer-indexed elements.

Every group enumerates its elements as ``0 .. order-1`` with the identity at
index 0.  Multiplication and inversion are served from precomputed tables, so
all downstream code (matrices, verifiers, search) works on plain integers.

Supported kinds and their enumeration order:

``z<n>``            additive cyclic group, index = residue, tokens ``0``..``n-1``.
``z<n1>xz<n2>...``  direct product of cyclics, generators named ``a, b, c, ...``;
                    index is mixed radix with the first factor fastest, so
                    ``z2xz2`` enumerates ``e, a, b, ab``.
``s3-a2b3``         S3 with a^2 = b^3 = e, ba = ab^2; order ``e, b, b2, a, ab, ab2``.
``s3-a3b2``         S3 with a^3 = b^2 = e, ba = a^2 b; order ``e, a, a2, b, ab, a2b``.
``q8``              quaternion units ``1, -1, i, -i, j, -j, k, -k``.
``roots<q>``        q-th roots of unity, index = exponent of a primitive root z.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from .quaternion import Quaternion

ZERO = -1
WILDCARD = -2
ZERO_TOKEN = "."
WILDCARD_TOKEN = "*"

KINDS = ("cyclic", "product", "s3", "q8", "roots")
S3_PRESENTATIONS = ("a2b3", "a3b2")
_LETTERS = "abcdfghkmnpqrstuvxy"  # skips e (identity), i, j, o, w, z

Q8_UNITS = (
    Quaternion(1, 0, 0, 0),
    Quaternion(-1, 0, 0, 0),
    Quaternion(0, 1, 0, 0),
    Quaternion(0, -1, 0, 0),
    Quaternion(0, 0, 1, 0),
    Quaternion(0, 0, -1, 0),
    Quaternion(0, 0, 0, 1),
    Quaternion(0, 0, 0, -1),
)
Q8_TOKENS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


class GroupError(ValueError):
    """Bad group descriptor, mixed-group operands or unknown element token."""


@dataclass(frozen=True)
class Group:
    kind: str
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GroupError(f"unsupported group kind {self.kind!r}")
        if self.kind in ("cyclic", "roots"):
            if len(self.params) != 1 or int(self.params[0]) < 1:
                raise GroupError(f"{self.kind} group needs a positive order, got {self.params}")
        elif self.kind == "product":
            if not self.params or any(int(n) < 1 for n in self.params):
                raise GroupError(f"product group needs positive factor orders, got {self.params}")
            if len(self.params) > len(_LETTERS):
                raise GroupError("too many factors")
        elif self.kind == "s3":
            if self.params not in ((p,) for p in S3_PRESENTATIONS):
                raise GroupError(f"S3 presentation must be one of {S3_PRESENTATIONS}, got {self.params}")
        elif self.params:
            raise GroupError("q8 takes no parameters")

    # -- naming -----------------------------------------------------------

    @property
    def name(self) -> str:
        if self.kind == "cyclic":
            return f"z{self.params[0]}"
        if self.kind == "product":
            return "x".join(f"z{n}" for n in self.params)
        if self.kind == "s3":
            return f"s3-{self.params[0]}"
        if self.kind == "roots":
            return f"roots{self.params[0]}"
        return "q8"

    def __str__(self) -> str:
        return self.name

    @property
    def order(self) -> int:
        if self.kind in ("cyclic", "roots"):
            return int(self.params[0])
        if self.kind == "product":
            return int(np.prod(self.params))
        return 6 if self.kind == "s3" else 8

    @property
    def is_cyclic_kind(self) -> bool:
        """True for ``z<n>`` and ``roots<q>`` (both indexed by residue mod n)."""
        return self.kind in ("cyclic", "roots")

    @property
    def default_semantics(self) -> str:
        return "additive" if self.kind == "cyclic" else "multiplicative"

    # -- tables -------------------------------------------------------------

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        n = self.order
        mul = np.empty((n, n), dtype=np.int64)
        if self.is_cyclic_kind:
            idx = np.arange(n)
            mul[:] = (idx[:, None] + idx[None, :]) % n
        elif self.kind == "product":
            coords = [self._coords(g) for g in range(n)]
            for g, h in product(range(n), repeat=2):
                mul[g, h] = self._index([(x + y) % m for x, y, m in zip(coords[g], coords[h], self.params)])
        elif self.kind == "s3":
            for g, h in product(range(n), repeat=2):
                mul[g, h] = self._s3_mul(g, h)
        else:
            lookup = {q: i for i, q in enumerate(Q8_UNITS)}
            for g, h in product(range(n), repeat=2):
                mul[g, h] = lookup[Q8_UNITS[g] * Q8_UNITS[h]]
        inv = np.array([int(np.flatnonzero(mul[g] == 0)[0]) for g in range(n)], dtype=np.int64)
        mul.setflags(write=False)
        inv.setflags(write=False)
        return mul, inv

    @property
    def mul_table(self) -> np.ndarray:
        return self._tables[0]

    @property
    def inv_table(self) -> np.ndarray:
        return self._tables[1]

    def mul(self, g: int, h: int) -> int:
        return int(self._tables[0][g, h])

    def inv(self, g: int) -> int:
        return int(self._tables[1][g])

    @cached_property
    def is_abelian(self) -> bool:
        m = self.mul_table
        return bool((m == m.T).all())

    def elements(self) -> range:
        return range(self.order)

    def check_axioms(self) -> None:
        """Full-table scan of closure, identity, inverses and associativity."""
        m, inv = self._tables
        n = self.order
        if m.min() < 0 or m.max() >= n:
            raise AssertionError(f"{self}: table not closed")
        idx = np.arange(n)
        if not ((m[0] == idx).all() and (m[:, 0] == idx).all()):
            raise AssertionError(f"{self}: index 0 is not a two-sided identity")
        if not ((m[idx, inv] == 0).all() and (m[inv, idx] == 0).all()):
            raise AssertionError(f"{self}: inverse table wrong")
        left = m[m[:, :, None], idx[None, None, :]]   # (gh)k
        right = m[idx[:, None, None], m[None, :, :]]  # g(hk)
        if not (left == right).all():
            raise AssertionError(f"{self}: not associative")
        for g in range(n):
            if len(set(m[g])) != n:
                raise AssertionError(f"{self}: row {g} of the table is not a permutation")

    # -- product / S3 helpers -------------------------------------------------

    def _coords(self, g: int) -> list[int]:
        out = []
        for m in self.params:
            out.append(g % m)
            g //= m
        return out

    def _index(self, coords) -> int:
        g, scale = 0, 1
        for c, m in zip(coords, self.params):
            g += (c % m) * scale
            scale *= m
        return g

    def _s3_pair(self, g: int) -> tuple[int, int]:
        # (power of order-3 generator, power of involution)
        return g % 3, g // 3

    def _s3_mul(self, g: int, h: int) -> int:
        r1, s1 = self._s3_pair(g)
        r2, s2 = self._s3_pair(h)
        if self.params[0] == "a2b3":
            # elements a^s b^r with a the involution, b the 3-cycle:
            # (a^s1 b^r1)(a^s2 b^r2) = a^(s1+s2) b^(r1*(-1)^s2 + r2)
            return ((s1 + s2) % 2) * 3 + (r1 * (-1) ** s2 + r2) % 3
        # a3b2: elements a^r b^s with a the 3-cycle, b the involution:
        # (a^r1 b^s1)(a^r2 b^s2) = a^(r1 + r2*(-1)^s1) b^(s1+s2)
        return ((s1 + s2) % 2) * 3 + (r1 + r2 * (-1) ** s1) % 3

    # -- tokens -----------------------------------------------------------------

    @cached_property
    def tokens(self) -> tuple[str, ...]:
        """Canonical token for every element index."""
        return tuple(self._format(g) for g in range(self.order))

    def _format(self, g: int) -> str:
        if self.kind == "cyclic":
            return str(g)
        if self.kind == "q8":
            return Q8_TOKENS[g]
        if self.kind == "roots":
            return _format_root(g, self.order)
        if self.kind == "product":
            word = "".join(_power(_LETTERS[i], c) for i, c in enumerate(self._coords(g)))
            return word or "e"
        r, s = self._s3_pair(g)
        if self.params[0] == "a2b3":
            return (_power("a", s) + _power("b", r)) or "e"
        return (_power("a", r) + _power("b", s)) or "e"

    def format(self, g: int) -> str:
        if g == ZERO:
            return ZERO_TOKEN
        if g == WILDCARD:
            return WILDCARD_TOKEN
        return self.tokens[g]

    def parse(self, token: str) -> int:
        """Element index (or ZERO / WILDCARD marker) for a token."""
        token = token.strip()
        if token == ZERO_TOKEN:
            return ZERO
        if token == WILDCARD_TOKEN:
            return WILDCARD
        if self.kind == "cyclic":
            if re.fullmatch(r"\d+", token) and int(token) < self.order:
                return int(token)
            raise GroupError(f"unknown token {token!r} for {self}")
        if self.kind == "q8":
            if token in Q8_TOKENS:
                return Q8_TOKENS.index(token)
            if token in ("+1", "+i", "+j", "+k"):
                return Q8_TOKENS.index(token[1:])
            raise GroupError(f"unknown token {token!r} for {self}")
        if self.kind == "roots":
            return _parse_root(token, self.order)
        return self._parse_word(token)

    def _parse_word(self, token: str) -> int:
        if token == "e":
            return 0
        if not re.fullmatch(r"(?:[a-z]\^?\d*)+", token):
            raise GroupError(f"unknown token {token!r} for {self}")
        if self.kind == "product":
            letters = _LETTERS[: len(self.params)]
        else:
            letters = "ab"
        g = 0
        for letter, exp in re.findall(r"([a-z])\^?(\d*)", token):
            if letter == "e":
                continue
            if letter not in letters:
                raise GroupError(f"unknown generator {letter!r} in token {token!r} for {self}")
            h = self._generator(letters.index(letter))
            for _ in range(int(exp) if exp else 1):
                g = self.mul(g, h)
        return g

    def _generator(self, i: int) -> int:
        if self.kind == "product":
            coords = [0] * len(self.params)
            coords[i] = 1
            return self._index(coords)
        # s3: 'a' is index 0 in the letters, 'b' index 1
        if self.params[0] == "a2b3":
            return 3 if i == 0 else 1
        return 1 if i == 0 else 3

    def element(self, token_or_index) -> GroupElement:
        g = self.parse(token_or_index) if isinstance(token_or_index, str) else int(token_or_index)
        if not 0 <= g < self.order:
            raise GroupError(f"{token_or_index!r} is not an element of {self}")
        return GroupElement(self, g)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self, 0)


def _power(letter: str, e: int) -> str:
    if e == 0:
        return ""
    return letter if e == 1 else f"{letter}{e}"


def root_w_exponent(q: int) -> int:
    """Exponent of z that the token ``w`` denotes.

    ``w`` is a primitive cube root of unity when 3 divides q (so that the
    usual omega notation reads naturally inside roots6), else z itself.
    """
    return q // 3 if q % 3 == 0 else 1


def _format_root(g: int, q: int) -> str:
    if g == 0:
        return "1"
    if q % 2 == 0 and g == q // 2:
        return "-1"
    if q == 4:
        return "i" if g == 1 else "-i"
    if q in (3, 6):
        w = root_w_exponent(q)
        for k in (1, 2):
            if g == k * w % q:
                return "w" if k == 1 else "w^2"
            if q % 2 == 0 and g == (k * w + q // 2) % q:
                return "-w" if k == 1 else "-w^2"
    return f"z^{g}"


_ROOT_RE = re.compile(r"([+-]?)(?:(1)|([wzi])(?:\^(-?\d+))?)")


def _parse_root(token: str, q: int) -> int:
    m = _ROOT_RE.fullmatch(token)
    if not m:
        raise GroupError(f"unknown token {token!r} for roots{q}")
    sign, one, sym, exp = m.groups()
    if one:
        g = 0
    elif sym == "i":
        if q % 4:
            raise GroupError(f"token {token!r} needs 4 | q (q={q})")
        if exp is not None:
            raise GroupError(f"unknown token {token!r} for roots{q}")
        g = q // 4
    else:
        base = 1 if sym == "z" else root_w_exponent(q)
        g = base * (int(exp) if exp is not None else 1)
    if sign == "-":
        if q % 2:
            raise GroupError(f"token {token!r}: -1 is not a root of odd order {q}")
        g += q // 2
    return g % q


@dataclass(frozen=True)
class GroupElement:
    group: Group
    index: int

    def __mul__(self, other: GroupElement) -> GroupElement:
        return group_op(self, other, "multiply")

    def inverse(self) -> GroupElement:
        return group_op(self, None, "inverse")

    @property
    def token(self) -> str:
        return self.group.tokens[self.index]

    def __repr__(self) -> str:
        return f"GroupElement({self.group.name}, {self.token!r})"


def group_op(g: GroupElement, h: GroupElement | None, mode: str = "multiply") -> GroupElement:
    """Product ``g*h`` or, in ``inverse`` mode, ``g^-1`` (h ignored)."""
    if mode == "inverse":
        return GroupElement(g.group, g.group.inv(g.index))
    if mode != "multiply":
        raise ValueError(f"mode must be 'multiply' or 'inverse', got {mode!r}")
    if h is None or g.group != h.group:
        raise GroupError("operands belong to different groups")
    return GroupElement(g.group, g.group.mul(g.index, h.index))


_ALIASES = {
    "klein": ("product", (2, 2)),
    "v4": ("product", (2, 2)),
    "q8": ("q8", ()),
    "s3": ("s3", ("a2b3",)),
}


def make_group(spec: str | Group | None = None, /, **kwargs) -> Group:
    """Build a group from a descriptor.

    Accepts canonical names (``z6``, ``z2xz2``, ``s3-a2b3``, ``q8``,
    ``roots6``), a few aliases (``klein``, ``mu6``, ``cyclic:6``,
    ``product:2,2``) or keywords ``make_group(kind="cyclic", n=6)``.
    """
    if isinstance(spec, Group):
        return spec
    if spec is None:
        kind = kwargs.pop("kind")
        if kind in ("cyclic", "roots"):
            return Group(kind, (int(kwargs.get("n", kwargs.get("q", 0))),))
        if kind == "product":
            return Group(kind, tuple(int(n) for n in kwargs["orders"]))
        if kind == "s3":
            return Group(kind, (kwargs.get("presentation", "a2b3"),))
        return Group(kind)
    s = spec.strip().lower().replace(" ", "")
    if s in _ALIASES:
        kind, params = _ALIASES[s]
        return Group(kind, params)
    if m := re.fullmatch(r"(?:z|cyclic:?)(-?\d+)", s):
        return _checked("cyclic", int(m.group(1)))
    if m := re.fullmatch(r"(?:roots|mu|roots:)(-?\d+)", s):
        return _checked("roots", int(m.group(1)))
    if m := re.fullmatch(r"product:([\d,]+)", s):
        return Group("product", tuple(_positive(int(x)) for x in m.group(1).split(",")))
    if re.fullmatch(r"z\d+(?:xz\d+)+", s):
        return Group("product", tuple(_positive(int(x)) for x in re.findall(r"\d+", s)))
    if m := re.fullmatch(r"s3[-:(]?(a2b3|a3b2)\)?", s):
        return Group("s3", (m.group(1),))
    raise GroupError(f"unsupported group descriptor {spec!r}")


def _positive(n: int) -> int:
    if n < 1:
        raise GroupError(f"group order must be positive, got {n}")
    return n


def _checked(kind: str, n: int) -> Group:
    return Group(kind, (_positive(n),))


def parse_element(token: str, group: Group) -> GroupElement | int:
    """Element for ``token``; the design-zero and wildcard return their markers."""
    g = group.parse(token)
    if g < 0:
        return g
    return GroupElement(group, g)
