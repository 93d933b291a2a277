"""Integer group rings Z[G]: multisets of group elements under convolution."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import Group, GroupError


@dataclass(frozen=True)
class GroupRingVector:
    group: Group
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.group.order:
            raise ValueError(f"need {self.group.order} counts, got {len(self.counts)}")

    @classmethod
    def zero(cls, group: Group) -> GroupRingVector:
        return cls(group, (0,) * group.order)

    @classmethod
    def delta(cls, group: Group, g: int = 0) -> GroupRingVector:
        c = [0] * group.order
        c[g] = 1
        return cls(group, tuple(c))

    @classmethod
    def from_elements(cls, group: Group, elements) -> GroupRingVector:
        """Multiset of element indices (tokens are parsed)."""
        c = [0] * group.order
        for g in elements:
            c[group.parse(g) if isinstance(g, str) else int(g)] += 1
        return cls(group, tuple(c))

    indicator = from_elements

    def __add__(self, other: GroupRingVector) -> GroupRingVector:
        _same(self, other)
        return GroupRingVector(self.group, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: GroupRingVector) -> GroupRingVector:
        _same(self, other)
        return GroupRingVector(self.group, tuple(a - b for a, b in zip(self.counts, other.counts)))

    def __rmul__(self, n: int) -> GroupRingVector:
        return GroupRingVector(self.group, tuple(n * a for a in self.counts))

    def __mul__(self, other: GroupRingVector) -> GroupRingVector:
        return ring_convolve(self, other)

    def total(self) -> int:
        return sum(self.counts)

    def is_uniform(self) -> bool:
        return len(set(self.counts)) == 1

    def as_dict(self) -> dict[str, int]:
        """Nonzero counts keyed by element token, in enumeration order."""
        return {self.group.tokens[g]: c for g, c in enumerate(self.counts) if c}

    def __str__(self) -> str:
        d = self.as_dict()
        if not d:
            return "0"
        return " + ".join(tok if c == 1 else f"{c}{tok}" for tok, c in d.items())


def _same(x: GroupRingVector, y: GroupRingVector) -> None:
    if x.group != y.group:
        raise GroupError(f"mixed groups {x.group} and {y.group}")


def ring_convolve(x: GroupRingVector, y: GroupRingVector, invert_y: bool = False) -> GroupRingVector:
    """Counts of all products g*h (or g*h^-1 when ``invert_y``) weighted by x_g y_h."""
    _same(x, y)
    G = x.group
    mul = G.mul_table
    right = G.inv_table if invert_y else np.arange(G.order)
    out = np.zeros(G.order, dtype=object)
    for g, a in enumerate(x.counts):
        if not a:
            continue
        for h, b in enumerate(y.counts):
            if b:
                out[mul[g, right[h]]] += a * b
    return GroupRingVector(G, tuple(int(v) for v in out))
