"""Acceptance suite: one test per criterion, summarized by conftest.

Criteria 1 and 4 are checked against the matrices exactly as printed and are
expected to fail; the ``-repaired`` companions check the documented repairs.
"""

import itertools
import os
import random
import time
from collections import Counter

import pytest

from grouporth import catalog
from grouporth import constructions as con
from grouporth.catalog import catalog_get, catalog_index, verify_entry
from grouporth.cyclotomic import CyclotomicInt, cyclo_zero_test
from grouporth.gmatrix import GMatrix, circulant
from grouporth.groupring import GroupRingVector, ring_convolve
from grouporth.groups import make_group
from grouporth.search import SearchSpec, brute_force_gh, search_circulant_gw, search_gh_backtrack
from grouporth.textio import parse_matrix, serialize
from grouporth.verify import verify, verify_balance, verify_butson, verify_numeric


@pytest.fixture
def crit(record_property):
    def note(number, detail=""):
        record_property("criterion", str(number))
        record_property("detail", detail)

    return note


def test_criterion_01_gh20_printed(crit):
    crit(1, "20x20 over Z5 as printed, lambda=4 on all 190 pairs")
    M = con.gh20_printed()
    t0 = time.perf_counter()
    rep = verify_balance(M)
    elapsed = time.perf_counter() - t0
    assert "Z4" in catalog_get("gh20").meta.notes
    assert elapsed < 1.0
    assert rep.params["pairs"] == 190
    assert rep.passed and rep.params["lambda"] == 4, f"{len(rep.failures)} of 190 pairs unbalanced"


def test_criterion_01_repaired(crit):
    crit("1-repaired", "gh20-repaired fixture, lambda=4 on all 190 pairs")
    t0 = time.perf_counter()
    rep = verify_balance(catalog_get("gh20-repaired").matrix)
    assert time.perf_counter() - t0 < 1.0
    assert rep.passed and rep.params["lambda"] == 4 and rep.params["pairs"] == 190


def test_criterion_02_gh6_z3(crit):
    crit(2, "GH(6;Z3) with lambda=2")
    rep = verify_balance(GMatrix.from_tokens("z3", con.GH6_Z3))
    assert rep.passed and rep.params["lambda"] == 2


def test_criterion_03_gh7(crit):
    crit(3, "both 7x7 matrices, Butson q=6, Gram = 7I")
    for which in ("a", "b"):
        M = con.gh7(which)
        rep = verify_butson(M, 6)
        assert rep.passed and rep.params["gram_diagonal"] == 7
        assert M == catalog_get(f"gh7-z6-{which}").matrix


def test_criterion_04_gh10_printed(crit):
    crit(4, "GH(10;Z6) from the printed rows, >=1 of 24 assignments")
    results = con.build_gh10_z6(con.GH10_PRINTED_ROWS)
    assert len(results) == 24
    passing = [str(a) for a, _, rep in results if rep.passed]
    assert passing, "no assignment of the printed rows passes"


def test_criterion_04_repaired(crit):
    crit("4-repaired", "GH(10;Z6) from the repaired rows, frozen and stable")
    runs = [[str(a) for a, _, rep in con.build_gh10_z6(con.GH10_REPAIRED_ROWS) if rep.passed] for _ in range(2)]
    assert runs[0] and runs[0] == runs[1]
    frozen = catalog_get("gh10-z6")
    assert frozen.matrix == con.gh10_z6() and frozen.check().passed


def test_criterion_05_small_fixtures(crit):
    crit(5, "H4 -> 4I, U -> 3I, complex A/B -> 2I, quaternion V -> 2I")
    rep = verify(catalog_get("h4").matrix, "real")
    assert rep.passed and rep.params["c"] == "4"
    rep = verify_butson(catalog_get("butson3").matrix, 3)
    assert rep.passed and rep.params["gram_diagonal"] == 3
    for name in ("complex-a", "complex-b"):
        rep = verify(catalog_get(name).matrix, "complex")
        assert rep.passed and rep.params["c"] == "2"
    rep = verify(catalog_get("quaternion-v").matrix, "quaternion")
    assert rep.passed and rep.params["c"] == "2"


def test_criterion_06_brock(crit):
    crit(6, "brock(7) is GH(21;Z3); brock(13) diagnostic is deterministic and complete")
    M7, rep7 = con.build_brock(7)
    assert rep7.passed and M7.shape == (21, 21)
    M13, a = con.build_brock(13)
    _, b = con.build_brock(13)
    assert a.to_text() == b.to_text()
    # completeness: every unbalanced pair found by an independent count is named
    G = M13.group
    bad = set()
    for i, j in itertools.combinations(range(M13.rows), 2):
        c = Counter(G.mul(x, G.inv(y)) for x, y in zip(M13.entries[i], M13.entries[j]) if x >= 0 and y >= 0)
        if len({c.get(g, 0) for g in range(G.order)}) != 1:
            bad.add((i, j))
    assert bad == set(a.failing_pairs())
    assert len(bad) == 312


def test_criterion_07_cubic_residues(crit):
    crit(7, "C0*C0 = C1 + 2C2 + 4 delta_0 over Z13, brute-force cross-check")
    Z13 = make_group("z13")
    C = [con.class_sum(13, i) for i in range(3)]
    got = ring_convolve(C[0], C[0])
    assert got == C[1] + 2 * C[2] + 4 * GroupRingVector.delta(Z13, 0)
    brute = [0] * 13
    pairs = 0
    for a, b in itertools.product([1, 5, 8, 12], repeat=2):
        brute[(a + b) % 13] += 1
        pairs += 1
    assert pairs == 16 and tuple(brute) == got.counts


def test_criterion_08_gw17_search(crit):
    crit(8, "full circulant GW(17,16;Z3) enumeration, then BH(34,6) by doubling")
    t0 = time.perf_counter()
    res = search_circulant_gw(17, 16, "z3", prefix_depth=2, jobs=os.cpu_count() or 1)
    elapsed = time.perf_counter() - t0
    assert elapsed < 600
    assert res.results
    C = circulant("z3", res.results[0])
    assert verify(C, "gw").passed
    assert C == catalog_get("gw17-z3").matrix
    M, rep = con.plugin_double(C)
    assert M.shape == (34, 34) and rep.passed and rep.params["q"] == 6


def test_criterion_09_table(crit):
    need = {2, 3, 4, 6, 7, 8, 9, 10, 12, 14, 16, 18, 20, 21, 24, 27, 28, 30, 32, 36, 40, 42, 48, 49}
    crit(9, f"table rows {min(need)}..52, {len(need)} required witnesses, NE/? labeled")
    rows = {r.n: r for r in con.build_table(2, 52)}
    for n in need:
        r = rows[n]
        assert r.status == "constructed+verified" and r.witness.shape == (n, n), r.line()
        assert verify_butson(r.witness, 6).passed
    for n, r in rows.items():
        if r.comment == "NE":
            assert r.status == "paper-says-NE" and r.witness is None
        if r.comment == "?":
            assert r.status == "paper-says-unknown" and r.witness is None


def test_criterion_10_oracles(crit):
    crit(10, "cyclotomic vs float (10k), pruned vs brute force (v|G|<=12), balance vs dict (1k)")
    import cmath

    rng = random.Random(10)
    for t in range(10_000):
        q = (2, 3, 4, 5, 6, 12)[t % 6]
        x = CyclotomicInt(q, tuple(rng.randint(-3, 3) if t % 2 else rng.choice((0, 1)) for _ in range(q)))
        fl = abs(sum(c * cmath.exp(2j * cmath.pi * k / q) for k, c in enumerate(x.coeffs))) < 1e-9
        assert cyclo_zero_test(x) == fl

    for g in ("z1", "z2", "z3", "z4", "klein", "z5", "z6"):
        n = make_group(g).order
        for v in range(1, 12 // n + 1):
            spec = SearchSpec("balance-gh", v, g, max_size=12)
            assert sorted(search_gh_backtrack(spec).results) == sorted(brute_force_gh(v, g)), (v, g)

    groups = ["z2", "z3", "klein", "z4", "s3-a2b3", "q8"]
    for t in range(1000):
        G = make_group(groups[t % len(groups)])
        rows = [[rng.randrange(G.order) for _ in range(G.order)] for _ in range(rng.randint(2, 4))]
        if t % 5 == 0:
            rows = [list(range(G.order)), [G.mul(g, rng.randrange(G.order)) for g in range(G.order)]]
        M = GMatrix(G, rows)
        ok = True
        for i, j in itertools.combinations(range(M.rows), 2):
            c = Counter(G.mul(x, G.inv(y)) for x, y in zip(rows[i], rows[j]))
            ok &= len({c.get(g, 0) for g in range(G.order)}) == 1
        assert verify_balance(M).passed == ok


def test_criterion_11_invariance(crit):
    crit(11, "permutations and abelian scaling keep verdicts; serial = parallel; parse.serialize = id")
    rng = random.Random(11)
    for meta in catalog_index():
        M = catalog_get(meta.name).matrix
        assert parse_matrix(serialize(M)) == M
        for _ in range(3):
            P = M.permute_rows(rng.sample(range(M.rows), M.rows)).permute_cols(rng.sample(range(M.cols), M.cols))
            if M.group.is_abelian:
                P = P.scale_row(rng.randrange(M.rows), rng.randrange(M.group.order))
            assert verify_entry(meta, P).verdict == meta.verdict, meta.name
    serial = search_gh_backtrack(SearchSpec("balance-gh", 6, "z3"))
    parallel = search_gh_backtrack(SearchSpec("balance-gh", 6, "z3", prefix_depth=2), jobs=4)
    assert serial.results == parallel.results
    assert search_circulant_gw(7, 4, "z2").results == search_circulant_gw(7, 4, "z2", prefix_depth=2, jobs=2).results


def test_criterion_12_diagnostics(crit):
    crit(12, "gw13-s3 x 4, strange13, residue39, klein fragment: deterministic; strange13 passes")

    def texts():
        out = [rep.to_text() for _, _, rep in con.gw13_s3_runs()]
        out.append(con.check_strange13().to_text())
        out.append(con.build_residue_39()[1].to_text())
        out.append(con.check_klein_fragment().to_text())
        return out

    first = texts()
    assert len(first) == 7 and first == texts()
    assert verify_numeric(con.strange13(), "real").passed
    assert catalog_get("strange13").meta.verdict == "pass"
    assert catalog.catalog_get("gw13-s3").meta.status == "diagnostic"
