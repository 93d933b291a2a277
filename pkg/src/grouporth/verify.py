"""Exact verifiers for orthogonality over groups.

Each verifier returns a :class:`VerificationReport`: the verdict, the
parameters it inferred (lambda, weight, Gram constant, ...) and, on failure,
every offending row pair (or row, column, entry) in lexicographic order.
No floating point enters any verdict.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .cyclotomic import CyclotomicInt
from .gmatrix import GMatrix, embed
from .groupring import GroupRingVector, ring_convolve
from .groups import Q8_UNITS, WILDCARD, ZERO, Group, make_group
from .quaternion import Quaternion


class VerifyError(ValueError):
    """Input outside the verifier's domain (as opposed to a failing verdict)."""


_KIND_ORDER = ("shape", "entry", "row-weight", "row-sum", "col-sum", "diagonal", "pair", "col-pair")


@dataclass(frozen=True)
class Failure:
    kind: str
    where: tuple[int, ...]
    expected: str
    actual: str

    def sort_key(self):
        head, _, tail = self.kind.rpartition(":")
        rank = _KIND_ORDER.index(tail) if tail in _KIND_ORDER else len(_KIND_ORDER)
        return (head, rank, self.where)

    def line(self) -> str:
        where = " ".join(str(w) for w in self.where)
        return f"  {self.kind} {where}: expected {self.expected}; actual {self.actual}"


@dataclass
class VerificationReport:
    property: str
    params: dict = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.failures = sorted(self.failures, key=Failure.sort_key)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def failing_pairs(self) -> list[tuple[int, ...]]:
        return [f.where for f in self.failures if f.kind.endswith("pair")]

    def header(self) -> str:
        params = " ".join(f"{k}={_fmt(v)}" for k, v in self.params.items())
        head = f"{self.verdict} {self.property}"
        if params:
            head += " " + params
        if self.failures:
            head += f" failures={len(self.failures)}"
        return head

    def to_text(self) -> str:
        lines = [self.header()]
        lines += [f"  note: {n}" for n in self.notes]
        lines += [f.line() for f in self.failures]
        return "\n".join(lines) + "\n"

    __str__ = to_text


def _fmt(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, (tuple, list)):
        return ",".join(str(x) for x in v)
    return str(v)


def _mode(values) -> int:
    """Most common value, ties broken towards the smallest."""
    c = Counter(int(v) for v in values)
    best = max(c.values())
    return min(v for v, n in c.items() if n == best)


def _multiset_text(group: Group, counts) -> str:
    return "{" + ", ".join(f"{group.tokens[g]}:{int(c)}" for g, c in enumerate(counts)) + "}"


# -- balance ------------------------------------------------------------------

CONVENTIONS = {"right": "x*y^-1", "left": "y^-1*x"}


def pair_counts(M: GMatrix, convention: str = "right") -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Quotient multisets for every row pair i < j.

    Returns ``(I, J, counts)`` where ``counts[p, g]`` is how often element g
    occurs among ``M[I[p],k] * M[J[p],k]^-1`` (or ``M[J[p],k]^-1 * M[I[p],k]``
    for the left convention) over the columns where both entries are nonzero.
    """
    G = M.group
    n = G.order
    A = M.array
    v = M.rows
    I, J = np.triu_indices(v, 1)
    X, Y = A[I], A[J]
    mask = (X >= 0) & (Y >= 0)
    Xc = np.where(mask, X, 0)
    Yi = G.inv_table[np.where(mask, Y, 0)]
    Q = G.mul_table[Xc, Yi] if convention == "right" else G.mul_table[Yi, Xc]
    Q = np.where(mask, Q, n)
    P = len(I)
    flat = (Q + (n + 1) * np.arange(P)[:, None]).ravel()
    counts = np.bincount(flat, minlength=P * (n + 1)).reshape(P, n + 1)[:, :n]
    return I, J, counts


def pair_multiset(M: GMatrix, i: int, j: int, convention: str = "right") -> GroupRingVector:
    """Quotient multiset of rows i and j, accumulated through the group ring."""
    G = M.group
    total = GroupRingVector.zero(G)
    for x, y in zip(M.entries[i], M.entries[j]):
        if x < 0 or y < 0:
            continue
        dx, dy = GroupRingVector.delta(G, x), GroupRingVector.delta(G, y)
        if convention == "right":
            total = total + ring_convolve(dx, dy, invert_y=True)
        else:
            total = total + ring_convolve(GroupRingVector.delta(G, G.inv(y)), dx)
    return total


def verify_balance(M: GMatrix, convention: str = "right") -> VerificationReport:
    """Group balance of every pair of distinct rows.

    Passes iff every pair's quotient multiset is uniform over the group with
    one common multiplicity.  With design-zeros present the row weight must
    also be constant (generalized weighing / Bhaskar Rao rows).

    ``lambda`` in the report is that common multiplicity per group element;
    ``overlap`` is the number of columns a row pair shares.
    """
    if M.has_wildcards:
        raise VerifyError("balance is undefined with wildcard entries")
    if convention not in CONVENTIONS:
        raise VerifyError(f"convention must be one of {sorted(CONVENTIONS)}")
    G = M.group
    n = G.order
    failures = []
    params: dict = {"group": G.name, "rows": M.rows, "cols": M.cols}
    if G.is_abelian and M.semantics == "additive":
        params["convention"] = "x-y"
    else:
        params["convention"] = CONVENTIONS[convention]

    if M.has_zeros:
        weights = (M.array >= 0).sum(axis=1)
        k = _mode(weights)
        params["k"] = k
        for i, w in enumerate(weights):
            if w != k:
                failures.append(Failure("row-weight", (i,), str(k), str(int(w))))

    if M.rows < 2:
        params.update(overlap=None, **{"lambda": None})
        return VerificationReport("balance", params, failures)

    I, J, counts = pair_counts(M, convention)
    overlaps = counts.sum(axis=1)
    overlap = _mode(overlaps)
    params["overlap"] = overlap
    if overlap % n:
        mu = None
        expected = f"uniform multiset, impossible: overlap {overlap} not divisible by |G|={n}"
    else:
        mu = overlap // n
        expected = _multiset_text(G, [mu] * n)
    params["lambda"] = mu
    params["pairs"] = len(I)
    bad = np.ones(len(I), bool) if mu is None else (counts != mu).any(axis=1)
    for p in np.flatnonzero(bad):
        failures.append(Failure("pair", (int(I[p]), int(J[p])), expected, _multiset_text(G, counts[p])))
    return VerificationReport("balance", params, failures)


def verify_difference_matrix(M: GMatrix, convention: str = "right") -> VerificationReport:
    if M.has_zeros:
        raise VerifyError("a difference matrix has no design-zeros")
    r = verify_balance(M, convention)
    r.property = "difference-matrix"
    return r


def verify_gh(M: GMatrix, convention: str = "right") -> VerificationReport:
    """Generalized Hadamard: square difference matrix."""
    if M.has_zeros:
        raise VerifyError("a generalized Hadamard matrix has no design-zeros")
    r = verify_balance(M, convention)
    r.property = "gh"
    if M.rows != M.cols:
        r.failures.insert(0, Failure("shape", (M.rows, M.cols), "square", f"{M.rows}x{M.cols}"))
    return r


def verify_gw(M: GMatrix, convention: str = "right") -> VerificationReport:
    """Generalized weighing matrix: square, constant weight, balanced pairs."""
    r = verify_balance(M, convention)
    r.property = "gw"
    r.params.setdefault("k", M.cols)
    if M.rows != M.cols:
        r.failures.insert(0, Failure("shape", (M.rows, M.cols), "square", f"{M.rows}x{M.cols}"))
    r.failures.sort(key=Failure.sort_key)
    return r


# -- Butson ---------------------------------------------------------------------


def _as_roots(M: GMatrix, q: int | None) -> tuple[GMatrix, int]:
    G = M.group
    if not G.is_cyclic_kind:
        raise VerifyError(f"Butson check needs roots-of-unity entries, got {G}")
    if q is None:
        q = G.order
    if q % G.order:
        raise VerifyError(f"entries of {G} are not {q}-th roots of unity")
    return embed(M, Group(G.kind, (q,))), q


def butson_gram(M: GMatrix, q: int | None = None) -> list[list[CyclotomicInt]]:
    """Exact Gram matrix M M^* with entries in Z[z_q]."""
    M, q = _as_roots(M, q)
    if M.has_zeros or M.has_wildcards:
        raise VerifyError("Butson check needs every entry to be a root of unity")
    A = M.array
    return [[CyclotomicInt.from_exponents(q, (A[i] - A[j]) % q) for j in range(M.rows)] for i in range(M.rows)]


def verify_butson(M: GMatrix, q: int | None = None) -> VerificationReport:
    """Butson orthogonality: Gram matrix equals (cols) * I in exact arithmetic."""
    M, q = _as_roots(M, q)
    if M.has_zeros or M.has_wildcards:
        raise VerifyError("Butson check needs every entry to be a root of unity")
    params = {"q": q, "rows": M.rows, "cols": M.cols, "gram_diagonal": M.cols}
    failures = []
    if M.rows > 1:
        I, J, counts = pair_counts(M, "right")
        params["pairs"] = len(I)
        for p in range(len(I)):
            x = CyclotomicInt(q, tuple(int(c) for c in counts[p]))
            if not x.is_zero():
                failures.append(Failure("pair", (int(I[p]), int(J[p])), "0", f"{x} (mod Phi_{q}: {list(x.reduced())})"))
    return VerificationReport("butson", params, failures)


# -- numeric (real / complex / quaternion / Cretan) -------------------------------

NUMERIC_KINDS = ("real", "complex", "quaternion", "cretan")


def numeric_entries(M) -> list[list[Quaternion | None]]:
    """Exact numeric view of a matrix; ``None`` marks a wildcard.

    A GMatrix over roots1/roots2 reads as +-1, over roots4 as Gaussian units,
    over q8 as quaternion units; design-zeros read as 0.  Nested lists of
    ints, Fractions, Gaussian complex numbers or Quaternions pass through.
    """
    if isinstance(M, GMatrix):
        G = M.group
        if G.kind == "roots" and G.order in (1, 2, 4):
            units = [Quaternion(1), Quaternion(0, 1), Quaternion(-1), Quaternion(0, -1)]
            step = 4 // G.order
            val = lambda x: units[(x * step) % 4]  # noqa: E731
        elif G.kind == "q8":
            val = Q8_UNITS.__getitem__
        else:
            raise VerifyError(f"entries of {G} have no exact numeric reading here; use the Butson or balance check")
        return [[None if x == WILDCARD else Quaternion(0) if x == ZERO else val(x) for x in r] for r in M.entries]
    out = []
    for r in M:
        row = []
        for x in r:
            if x is None or (isinstance(x, str) and x == "*"):
                row.append(None)
            else:
                try:
                    row.append(Quaternion.coerce(x))
                except (TypeError, ValueError) as exc:
                    raise VerifyError(str(exc)) from None
        out.append(row)
    if not out or any(len(r) != len(out[0]) for r in out):
        raise VerifyError("ragged numeric matrix")
    return out


def verify_numeric(M, kind: str = "real") -> VerificationReport:
    """Orthogonal rows in exact arithmetic: M M^* = c I for a constant c.

    The adjoint matches the kind (transpose, conjugate transpose, quaternion
    conjugate transpose).  Wildcards (real kind only) are masked pairwise: a
    column is skipped for a row pair iff either row has a wildcard there.
    The Cretan kind is real orthogonality plus |entry| <= 1.
    """
    if kind not in NUMERIC_KINDS:
        raise VerifyError(f"kind must be one of {NUMERIC_KINDS}")
    X = numeric_entries(M)
    v, b = len(X), len(X[0])
    has_wild = any(x is None for r in X for x in r)
    if has_wild and kind != "real":
        raise VerifyError("wildcards are only allowed for the real kind")
    for i, r in enumerate(X):
        for j, x in enumerate(r):
            if x is None:
                continue
            if kind in ("real", "cretan") and not x.is_real:
                raise VerifyError(f"entry ({i},{j}) = {x} is not real")
            if kind == "complex" and not x.is_complex:
                raise VerifyError(f"entry ({i},{j}) = {x} is not complex")

    failures = []
    if kind == "cretan":
        for i, r in enumerate(X):
            for j, x in enumerate(r):
                if abs(x.a) > 1:
                    failures.append(Failure("entry", (i, j), "|x| <= 1", str(x)))

    def inner(i, j):
        s = Quaternion(0)
        for x, y in zip(X[i], X[j]):
            if x is None or y is None:
                continue
            s = s + x * y.conj()
        return s

    diag = [inner(i, i) for i in range(v)]
    c = Counter(diag).most_common()
    best = max(n for _, n in c)
    const = min((d for d, n in c if n == best), key=lambda q: (q.a, q.b, q.c, q.d))
    for i, d in enumerate(diag):
        if d != const:
            failures.append(Failure("diagonal", (i, i), str(const), str(d)))
    for i in range(v):
        for j in range(i + 1, v):
            s = inner(i, j)
            if not s.is_zero():
                failures.append(Failure("pair", (i, j), "0", str(s)))
    params = {"kind": kind, "rows": v, "cols": b, "c": str(const)}
    if has_wild:
        params["wildcards"] = "masked-pairwise"
    return VerificationReport(kind, params, failures)


# -- block designs ----------------------------------------------------------------


def incidence(M) -> np.ndarray:
    if isinstance(M, GMatrix):
        if M.has_wildcards:
            raise VerifyError("block designs cannot contain wildcards")
        return M.flatten()
    A = np.array(M, dtype=object)
    if A.ndim != 2 or not np.isin(A, [0, 1]).all():
        raise VerifyError("incidence matrix entries must be 0 or 1")
    return A.astype(np.int64)


def verify_block_design(
    M,
    v: int | None = None,
    b: int | None = None,
    r: int | None = None,
    k: int | None = None,
    lam: int | None = None,
    symmetric: bool = False,
) -> VerificationReport:
    """BIBD (or, with ``symmetric``, SBIBD) check of a 0/1 incidence pattern.

    Parameters left as None are inferred as the most common observed value
    and reported; given parameters are demanded.  A GMatrix is flattened
    first (group elements -> 1, design-zeros -> 0).
    """
    A = incidence(M)
    rows, cols = A.shape
    failures = []
    if v is not None and v != rows:
        failures.append(Failure("shape", (rows, cols), f"v={v}", f"v={rows}"))
    if b is not None and b != cols:
        failures.append(Failure("shape", (rows, cols), f"b={b}", f"b={cols}"))
    if symmetric and rows != cols:
        failures.append(Failure("shape", (rows, cols), "v=b", f"{rows}x{cols}"))

    rs, ks = A.sum(axis=1), A.sum(axis=0)
    r = _mode(rs) if r is None else r
    k = _mode(ks) if k is None else k
    failures += [Failure("row-sum", (i,), str(r), str(int(s))) for i, s in enumerate(rs) if s != r]
    failures += [Failure("col-sum", (j,), str(k), str(int(s))) for j, s in enumerate(ks) if s != k]

    G = A @ A.T
    I, J = np.triu_indices(rows, 1)
    if lam is None and len(I):
        lam = _mode(G[I, J])
    failures += [Failure("pair", (int(i), int(j)), str(lam), str(int(G[i, j]))) for i, j in zip(I, J) if G[i, j] != lam]
    if symmetric and rows == cols:
        H = A.T @ A
        failures += [
            Failure("col-pair", (int(i), int(j)), str(lam), str(int(H[i, j]))) for i, j in zip(I, J) if H[i, j] != lam
        ]
    params = {"v": rows, "b": cols, "r": r, "k": k, "lambda": lam}
    return VerificationReport("sbibd" if symmetric else "bibd", params, failures)


def verify_bhaskar_rao(M: GMatrix, convention: str = "right", **design) -> VerificationReport:
    """Underlying BIBD plus group balance of the signed entries."""
    d = verify_block_design(M, **design)
    g = verify_balance(M, convention)
    failures = [Failure(f"bibd:{f.kind}", f.where, f.expected, f.actual) for f in d.failures]
    failures += [Failure(f"balance:{f.kind}", f.where, f.expected, f.actual) for f in g.failures]
    params = dict(d.params)
    params["group"] = g.params["group"]
    params["convention"] = g.params["convention"]
    params["balance_lambda"] = g.params.get("lambda")
    return VerificationReport("brd", params, failures)


# -- dispatch -----------------------------------------------------------------------

PROPERTIES = (
    "balance", "difference", "gh", "gw", "butson",
    "real", "complex", "quaternion", "cretan",
    "bibd", "sbibd", "brd",
)


def verify(M, prop: str, convention: str = "right", q: int | None = None) -> VerificationReport:
    if prop == "balance":
        return verify_balance(M, convention)
    if prop == "difference":
        return verify_difference_matrix(M, convention)
    if prop == "gh":
        return verify_gh(M, convention)
    if prop == "gw":
        return verify_gw(M, convention)
    if prop == "butson":
        return verify_butson(M, q)
    if prop in NUMERIC_KINDS:
        return verify_numeric(M, prop)
    if prop == "bibd":
        return verify_block_design(M)
    if prop == "sbibd":
        return verify_block_design(M, symmetric=True)
    if prop == "brd":
        return verify_bhaskar_rao(M, convention)
    raise VerifyError(f"unknown property {prop!r}; choose from {', '.join(PROPERTIES)}")


def auto_properties(M: GMatrix) -> list[str]:
    """Properties suggested by a matrix's group and entry domain."""
    G = M.group
    if M.has_wildcards:
        return ["real"]
    if M.has_zeros:
        return ["gw", "brd"] if M.rows == M.cols else ["brd"]
    props = []
    if G.kind == "roots":
        if G.order <= 2:
            props.append("real")
        elif G.order == 4:
            props.append("complex")
        props.append("butson")
    if G.kind == "q8":
        props.append("quaternion")
    # balance is only attainable when |G| divides the row length
    if M.cols % G.order == 0 or not props:
        props.append("balance")
    return props


def fraction_matrix(rows) -> list[list[Fraction]]:
    """Convenience for Cretan input given as strings like '1/2'."""
    return [[Fraction(x) for x in r] for r in rows]


__all__ = [
    "Failure", "VerificationReport", "VerifyError", "verify_balance", "verify_butson",
    "verify_numeric", "verify_block_design", "verify_bhaskar_rao", "verify_gh", "verify_gw",
    "verify_difference_matrix", "verify", "auto_properties", "butson_gram", "pair_counts",
    "pair_multiset", "make_group",
]
