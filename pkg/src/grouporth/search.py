"""Desk-scale exhaustive searches.

Two targets:

* ``balance-gh``: row-by-row backtracking for v x b difference matrices
  (square: generalized Hadamard) over a finite group.  Rows after the
  first are kept in strictly increasing lexicographic order, so each
  solution is listed once up to reordering of those rows.
* ``circulant-gw``: first rows of circulant generalized weighing matrices,
  pruned on the shift autocorrelation multisets.

Both enumerate in a fixed lexicographic order and split their search space
into independent work units by a prefix of fixed leading entries.  Units
can run in worker processes; merged output is identical to a serial run.
"""

from __future__ import annotations

import itertools
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .gmatrix import GMatrix, circulant
from .groups import ZERO, Group, GroupError, make_group
from .textio import write_matrix
from .verify import verify_balance

DESK_BOUND = 24
TARGETS = ("balance-gh", "circulant-gw")


class SearchError(ValueError):
    """Invalid search parameters."""


@dataclass(frozen=True)
class SearchSpec:
    target: str
    v: int
    group: str
    k: int | None = None
    b: int | None = None
    normalized: bool = True
    limit: int | None = None
    prefix_depth: int = 0
    max_size: int = DESK_BOUND

    def __post_init__(self):
        if self.target not in TARGETS:
            raise SearchError(f"target must be one of {TARGETS}")
        if self.v < 1:
            raise SearchError("v must be positive")
        if self.k is not None and not 0 <= self.k <= self.v:
            raise SearchError(f"weight k={self.k} must lie in [0, v={self.v}]")
        if self.limit is not None and self.limit < 1:
            raise SearchError("limit must be positive")

    @property
    def G(self) -> Group:
        return make_group(self.group)


@dataclass
class SearchResult:
    spec: SearchSpec
    status: str  # found | searched-none | proven-empty
    results: list = field(default_factory=list)
    units: int = 1
    nodes: int = 0
    elapsed: float = 0.0
    reason: str = ""

    def matrices(self) -> list[GMatrix]:
        G = self.spec.G
        if self.spec.target == "circulant-gw":
            return [circulant(G, r) for r in self.results]
        return [GMatrix(G, r) for r in self.results]

    def summary(self) -> str:
        s = self.spec
        line = f"{self.status} target={s.target} v={s.v} group={s.G.name}"
        if s.k is not None:
            line += f" k={s.k}"
        line += f" results={len(self.results)} units={self.units}"
        if self.reason:
            line += f" reason={self.reason}"
        return line


# -- normalization ------------------------------------------------------------------


def normalize_matrix(M: GMatrix) -> GMatrix:
    """Identity first row and column, by column then row multiplication."""
    G = M.group
    if not G.is_abelian:
        raise GroupError(f"normalization is only defined here for abelian groups, not {G}")
    if M.has_zeros or M.has_wildcards:
        raise GroupError("normalization needs a matrix without zeros or wildcards")
    A = np.array(M.array)
    mul, inv = G.mul_table, G.inv_table
    A = mul[A, inv[A[0]][None, :]]
    A = mul[A, inv[A[:, 0]][:, None]]
    return M.with_entries(A.tolist())


# -- balance-gh backtracking -----------------------------------------------------------


def _gh_params(spec: SearchSpec):
    G = spec.G
    b = spec.b or spec.v
    return G, b


def _gh_preflight(spec: SearchSpec) -> str:
    G, b = _gh_params(spec)
    if spec.v > 1 and b % G.order:
        return f"overlap {b} not divisible by |G|={G.order}"
    return ""


def _first_row(G: Group, b: int) -> tuple[int, ...]:
    return (0,) * b


def gh_units(spec: SearchSpec) -> list[tuple[int, ...]]:
    """Prefixes of row 1 (after its fixed first entry when normalized)."""
    G, b = _gh_params(spec)
    if spec.v < 2:
        return [()]
    free = b - 1 if spec.normalized else b
    depth = min(spec.prefix_depth, free)
    return [tuple(p) for p in itertools.product(range(G.order), repeat=depth)]


def _gh_unit(spec: SearchSpec, prefix: tuple[int, ...]) -> tuple[list, int]:
    G, b = _gh_params(spec)
    n = G.order
    v = spec.v
    cap = b // n
    mul, inv = G.mul_table, G.inv_table
    rows = np.zeros((v, b), dtype=np.int64)
    counts = np.zeros((v, n), dtype=np.int64)
    out: list = []
    nodes = 0
    lead = 1 if spec.normalized else 0
    limit = spec.limit

    def fill_row(r: int, c: int, tight: bool) -> bool:
        # tight: row r so far equals row r-1 on columns < c (lex ordering constraint)
        nonlocal nodes
        nodes += 1
        if c == b:
            if tight:
                return False
            if r + 1 == v:
                out.append(tuple(map(tuple, rows.tolist())))
                return limit is not None and len(out) >= limit
            saved = counts.copy()
            counts[:] = 0
            stop = start_row(r + 1)
            counts[:] = saved
            return stop
        if r == 1 and c - lead < len(prefix) and c >= lead:
            choices = (prefix[c - lead],)
        elif c < lead:
            choices = (0,)
        else:
            choices = range(n)
        lo = rows[r - 1, c] if (tight and r > 1) else 0
        for x in choices:
            if x < lo:
                continue
            prev = rows[:r, c]
            d = mul[x, inv[prev]]
            idx = np.arange(r)
            counts[idx, d] += 1
            if counts[idx, d].max() <= cap:
                rows[r, c] = x
                if fill_row(r, c + 1, tight and r > 1 and x == rows[r - 1, c]):
                    counts[idx, d] -= 1
                    return True
            counts[idx, d] -= 1
        return False

    def start_row(r: int) -> bool:
        return fill_row(r, 0, r > 1)

    if spec.normalized:
        rows[0] = _first_row(G, b)
        if v == 1:
            return [tuple(map(tuple, rows.tolist()))], 1
        start_row(1)
    else:
        for first in itertools.product(range(n), repeat=b):
            rows[0] = first
            if v == 1:
                out.append((tuple(first),))
            elif start_row(1):
                break
            if limit is not None and len(out) >= limit:
                break
    return out, nodes


def _run_units(fn, spec, units, jobs: int):
    if jobs and jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, [spec] * len(units), units))
    return [fn(spec, u) for u in units]


def search_gh_backtrack(spec: SearchSpec, jobs: int = 1, checkpoint: str | Path | None = None) -> SearchResult:
    """All (normalized) balanced matrices, rows 1.. in increasing lex order.

    Prunes a partial row as soon as some quotient count against an earlier
    row exceeds b/|G|.  Every returned matrix is re-checked by verify_balance.
    """
    if spec.target != "balance-gh":
        raise SearchError("spec target must be balance-gh")
    G, b = _gh_params(spec)
    if spec.v * G.order > spec.max_size:
        raise SearchError(f"v*|G| = {spec.v * G.order} exceeds the desk bound {spec.max_size}")
    t0 = time.perf_counter()
    why = _gh_preflight(spec)
    if why:
        return SearchResult(spec, "proven-empty", reason=why, elapsed=time.perf_counter() - t0)
    units = gh_units(spec)
    done = _run_with_checkpoint(_gh_unit, spec, units, jobs, checkpoint)
    results, nodes = _merge(done, spec.limit)
    for r in results:
        rep = verify_balance(GMatrix(G, r))
        if not rep.passed:  # pragma: no cover - would be a search bug
            raise AssertionError(f"search produced an unbalanced matrix:\n{rep.to_text()}")
    status = "found" if results else "searched-none"
    return SearchResult(spec, status, results, len(units), nodes, time.perf_counter() - t0)


def _merge(done, limit):
    results, nodes = [], 0
    for res, n in done:
        results.extend(res)
        nodes += n
    if limit is not None:
        results = results[:limit]
    return results, nodes


def brute_force_gh(v: int, group, b: int | None = None, normalized: bool = True) -> list:
    """Unpruned oracle: every increasing tuple of candidate rows, balance by dict counts."""
    G = make_group(group)
    b = b or v
    n = G.order
    lead = 1 if normalized else 0
    cand = [(0,) * lead + t for t in itertools.product(range(n), repeat=b - lead)]

    def balanced(x, y):
        c = Counter(G.mul(p, G.inv(q)) for p, q in zip(x, y))
        return len(c) == n and len(set(c.values())) == 1

    out = []
    firsts = [(0,) * b] if normalized else list(itertools.product(range(n), repeat=b))
    for first in firsts:
        for rest in itertools.combinations(cand, v - 1):
            rows = (tuple(first),) + rest
            if all(balanced(x, y) for x, y in itertools.combinations(rows, 2)):
                out.append(rows)
    return out


# -- circulant GW -----------------------------------------------------------------------


def _gw_params(spec: SearchSpec):
    v, G = spec.v, spec.G
    k = v if spec.k is None else spec.k
    if k > v:
        raise SearchError(f"weight k={k} exceeds v={v}")
    return v, k, G


def _gw_preflight(spec: SearchSpec) -> str:
    v, k, G = _gw_params(spec)
    if v == 1:
        return ""
    if k * (k - 1) % (v - 1):
        return f"overlap k(k-1)/(v-1) = {k * (k - 1)}/{v - 1} is not an integer"
    lam = k * (k - 1) // (v - 1)
    if lam % G.order:
        return f"overlap {lam} not divisible by |G|={G.order}"
    return ""


def zero_patterns(v: int, k: int) -> list[tuple[int, ...]]:
    """Design-zero position sets, each containing position 0 (up to cyclic shift)."""
    if k == v:
        return [()]
    return [(0,) + c for c in itertools.combinations(range(1, v), v - k - 1)]


def gw_units(spec: SearchSpec) -> list[tuple]:
    v, k, G = _gw_params(spec)
    depth = min(spec.prefix_depth, k)
    return [(z, p) for z in zero_patterns(v, k) for p in itertools.product(range(G.order), repeat=depth)]


def _gw_unit(spec: SearchSpec, unit) -> tuple[list, int]:
    zeros, prefix = unit
    v, k, G = _gw_params(spec)
    n = G.order
    mul, inv = G.mul_table.tolist(), G.inv_table.tolist()
    lam = k * (k - 1) // (v - 1) if v > 1 else 0
    cap = lam // n
    half = v // 2
    x = [None] * v
    for z in zeros:
        x[z] = ZERO
    free = [p for p in range(v) if x[p] is None]
    # completed pairs when position p is filled: (a, b) with a, b <= p
    pairs = {}
    for p in range(v):
        lst = []
        for d in range(1, half + 1):
            if p - d >= 0:
                lst.append((d, p, p - d))
            t = p + d - v  # wrapped pair; for d = v/2 this is the reverse orientation
            if t >= 0:
                lst.append((d, t, p))
        pairs[p] = lst
    counts = [[0] * n for _ in range(half + 1)]
    out: list = []
    nodes = 0
    limit = spec.limit
    order = sorted(range(v))  # fill positions left to right

    def settle(p) -> list:
        touched = []
        for d, a, b in pairs[p]:
            xa, xb = x[a], x[b]
            if xa == ZERO or xb == ZERO or xa is None or xb is None:
                continue
            g = mul[xa][inv[xb]]
            counts[d][g] += 1
            touched.append((d, g))
        return touched

    def rec(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if i == v:
            if any(c != cap for row in counts[1:] for c in row):
                return False
            out.append(tuple(x))
            return limit is not None and len(out) >= limit
        p = order[i]
        if x[p] == ZERO:
            touched = settle(p)
            ok = all(counts[d][g] <= cap for d, g in touched)
            stop = ok and rec(i + 1)
            for d, g in touched:
                counts[d][g] -= 1
            return stop
        slot = free.index(p)
        choices = (prefix[slot],) if slot < len(prefix) else range(n)
        for val in choices:
            x[p] = val
            touched = settle(p)
            ok = all(counts[d][g] <= cap for d, g in touched)
            stop = ok and rec(i + 1)
            for d, g in touched:
                counts[d][g] -= 1
            if stop:
                return True
        x[p] = None
        return False

    rec(0)
    return out, nodes


def search_circulant_gw(
    v: int,
    k: int | None = None,
    group="z3",
    limit: int | None = None,
    prefix_depth: int = 0,
    jobs: int = 1,
    checkpoint: str | Path | None = None,
) -> SearchResult:
    """First rows of circulant GW(v, k; G), uniform shift multisets of size k(k-1)/(v-1).

    Checking shifts 1..v//2 suffices: shift v-d yields the elementwise inverse
    multiset of shift d.  Each accepted row is re-verified on the full circulant.
    Candidates are ordered by zero pattern, then lexicographically by value.
    """
    G = make_group(group)
    if k is not None and k > v:
        raise SearchError(f"weight k={k} exceeds v={v}")
    spec = SearchSpec("circulant-gw", v, G.name, k=v if k is None else k, limit=limit, prefix_depth=prefix_depth)
    t0 = time.perf_counter()
    why = _gw_preflight(spec)
    if why:
        return SearchResult(spec, "proven-empty", reason=why, elapsed=time.perf_counter() - t0)
    units = gw_units(spec)
    done = _run_with_checkpoint(_gw_unit, spec, units, jobs, checkpoint)
    results, nodes = _merge(done, limit)
    for r in results:
        rep = verify_balance(circulant(G, r))
        if not rep.passed:  # pragma: no cover - would be a search bug
            raise AssertionError(f"search produced an unbalanced circulant:\n{rep.to_text()}")
    status = "found" if results else "searched-none"
    return SearchResult(spec, status, results, len(units), nodes, time.perf_counter() - t0)


# -- checkpoints and manifests ---------------------------------------------------------------


def _unit_key(unit) -> str:
    return json.dumps(unit)


def _run_with_checkpoint(fn, spec: SearchSpec, units, jobs: int, checkpoint):
    """Run units in order; with a checkpoint file, completed units are reused.

    Units are processed in batches of ``jobs``; after each batch the record of
    completed units (and their results) is rewritten, so an interrupted run
    resumes after the last finished batch.  A limit stops early once met.
    """
    path = Path(checkpoint) if checkpoint else None
    state = {"spec": asdict(spec), "done": {}}
    if path and path.exists():
        old = json.loads(path.read_text())
        if old.get("spec") != state["spec"]:
            raise SearchError(f"checkpoint {path} belongs to a different search spec")
        state = old
    done = []
    found = 0
    step = max(1, jobs)
    for start in range(0, len(units), step):
        batch = units[start : start + step]
        todo = [u for u in batch if _unit_key(u) not in state["done"]]
        fresh = dict(zip(map(_unit_key, todo), _run_units(fn, spec, todo, jobs)))
        for u in batch:
            key = _unit_key(u)
            if key in fresh:
                res, nodes = fresh[key]
                state["done"][key] = {"results": [list(map(list, r)) if _nested(r) else list(r) for r in res], "nodes": nodes}
            rec = state["done"][key]
            res = [tuple(map(tuple, r)) if _nested(r) else tuple(r) for r in rec["results"]]
            done.append((res, rec["nodes"]))
            found += len(res)
        if path:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(state, indent=1))
        if spec.limit is not None and found >= spec.limit:
            break
    return done


def _nested(r) -> bool:
    return bool(r) and isinstance(r[0], (list, tuple))


def write_results(result: SearchResult, outdir) -> Path:
    """Matrix files plus a manifest; the manifest carries the only timing data."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    files = []
    for i, M in enumerate(result.matrices(), start=1):
        files.append(write_matrix(outdir / f"result-{i:04d}.gmat", M).name)
    manifest = {
        "spec": asdict(result.spec),
        "status": result.status,
        "reason": result.reason,
        "units": result.units,
        "nodes": result.nodes,
        "results": len(result.results),
        "files": files,
        "wall_seconds": round(result.elapsed, 3),
    }
    path = outdir / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2) + "\n")
    return path


def run_search(spec: SearchSpec, jobs: int = 1, checkpoint=None) -> SearchResult:
    if spec.target == "balance-gh":
        return search_gh_backtrack(spec, jobs, checkpoint)
    return search_circulant_gw(spec.v, spec.k, spec.group, spec.limit, spec.prefix_depth, jobs, checkpoint)
