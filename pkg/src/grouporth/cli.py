"""Command-line interface.

Exit codes: 0 pass/success, 1 verified fail, 2 usage or parse error,
3 internal error.  Reports go to stdout, matrices to files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog, constructions as con
from .gmatrix import GMatrix, MatrixError, kronecker_compose
from .groups import GroupError
from .search import SearchError, SearchSpec, run_search, write_results
from .textio import MatrixFormatError, read_matrix, serialize, write_matrix
from .verify import PROPERTIES, VerifyError, auto_properties, verify, verify_block_design

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load(ref: str) -> GMatrix:
    """A matrix file path or a catalog name."""
    p = Path(ref)
    if p.exists():
        return read_matrix(p)
    if ref in catalog.catalog_names():
        return catalog.catalog_matrix(ref)
    raise UsageError(f"{ref!r} is neither a file nor a catalog entry")


def _emit(report) -> None:
    sys.stdout.write(report.to_text())


def _write(path, M: GMatrix) -> None:
    write_matrix(path, M)
    print(f"wrote {path} ({M.rows}x{M.cols} over {M.group.name})")


# -- verify ----------------------------------------------------------------------------------


def cmd_verify(args) -> int:
    M = read_matrix(args.file)
    props = auto_properties(M) if args.property == "auto" else [args.property]
    ok = True
    for prop in props:
        if prop == "sbibd":
            rep = verify_block_design(M, symmetric=True)
        else:
            rep = verify(M, prop, convention=args.convention, q=args.q)
        _emit(rep)
        ok &= rep.passed
    return EXIT_OK if ok else EXIT_FAIL


# -- construct -------------------------------------------------------------------------------

BUILDERS = (
    "gh10-z6", "four-circulant", "brock", "residue39", "plugin-double", "kronecker",
    "klein-fragment", "cubic-residues", "gw13-s3", "strange13",
)


def _out(args, default: str) -> Path:
    return Path(args.out) if args.out else Path(default)


def cmd_construct(args) -> int:
    name = args.name
    extra = args.inputs
    if name in catalog.catalog_names() and name not in BUILDERS:
        entry = catalog.catalog_get(name)
        _write(_out(args, f"{name}.gmat"), entry.matrix)
        rep = entry.check()
        _emit(rep)
        return EXIT_OK if rep.passed or entry.meta.status == "diagnostic" else EXIT_FAIL
    if name not in BUILDERS:
        raise UsageError(f"unknown construction {name!r}; builders: {', '.join(BUILDERS)}; "
                         f"catalog: {', '.join(catalog.catalog_names())}")

    if name == "gh10-z6":
        rows = con.GH10_REPAIRED_ROWS if args.repaired else con.GH10_PRINTED_ROWS
        results = con.build_gh10_z6(rows)
        passing = [(a, M) for a, M, rep in results if rep.passed]
        for a, _, rep in results:
            print(f"{a}: {rep.header()}")
        print(f"{len(passing)} of {len(results)} assignments pass ({'repaired' if args.repaired else 'printed'} rows)")
        if passing:
            _write(_out(args, "gh10-z6.gmat"), passing[0][1])
        return EXIT_OK if passing else EXIT_FAIL

    if name == "four-circulant":
        rows = {5: con.KLEIN_ROWS_5, 7: con.KLEIN_ROWS_7}.get(args.length)
        if rows is None:
            raise UsageError("four-circulant rows are printed for --length 5 or 7")
        results = con.build_four_circulant(rows)
        passing = [(arr, M) for arr, M, rep in results if rep.passed]
        fails = {}
        for _, _, rep in results:
            fails[len(rep.failures)] = fails.get(len(rep.failures), 0) + 1
        print(f"four-circulant n={args.length}: {len(passing)} of {len(results)} arrangements balanced")
        print("failure-count histogram: " + " ".join(f"{k}:{v}" for k, v in sorted(fails.items())))
        for arr, M in passing:
            print(f"  pass {arr}")
        if passing:
            _write(_out(args, "four-circulant.gmat"), passing[0][1])
        return EXIT_OK

    if name == "brock":
        if args.length not in con.BROCK:
            raise UsageError(f"brock needs --length in {sorted(con.BROCK)}")
        M, rep = con.build_brock(args.length)
        _write(_out(args, f"brock{args.length}.gmat"), M)
        _emit(rep)
        return EXIT_OK if rep.passed or args.length == 13 else EXIT_FAIL

    if name == "residue39":
        M, rep = con.build_residue_39()
        _write(_out(args, "residue39.gmat"), M)
        _emit(rep)
        return EXIT_OK

    if name == "plugin-double":
        if len(extra) != 1:
            raise UsageError("plugin-double takes one input matrix (file or catalog name)")
        M, rep = con.plugin_double(_load(extra[0]), star=args.star)
        _write(_out(args, "plugin-double.gmat"), M)
        _emit(rep)
        return EXIT_OK if rep.passed else EXIT_FAIL

    if name == "kronecker":
        if len(extra) < 2:
            raise UsageError("kronecker takes two or more input matrices")
        K = _load(extra[0])
        for ref in extra[1:]:
            K = kronecker_compose(K, _load(ref))
        _write(_out(args, "kronecker.gmat"), K)
        rep = verify(K, "butson") if K.group.is_cyclic_kind else verify(K, "balance")
        _emit(rep)
        return EXIT_OK if rep.passed else EXIT_FAIL

    if name == "klein-fragment":
        sys.stdout.write(con.check_klein_fragment().to_text())
        return EXIT_OK

    if name == "cubic-residues":
        print(f"cubic residue classes mod 13: {con.residue_classes(13)}")
        for k, d in con.cubic_residue_products().items():
            print(f"  {k} = {con.format_classes(d)}")
        return EXIT_OK

    if name == "gw13-s3":
        for pres, conv, rep in con.gw13_s3_runs():
            print(f"presentation={pres} quotient={conv}")
            _emit(rep)
        return EXIT_OK

    # strange13
    _emit(con.check_strange13())
    return EXIT_OK


# -- search / table / catalog -----------------------------------------------------------------------


def cmd_search(args) -> int:
    spec = SearchSpec(
        args.target, args.v, args.group, k=args.k, b=args.b, normalized=not args.no_normalize,
        limit=args.limit, prefix_depth=args.prefix_depth,
        max_size=args.max_size,
    )
    res = run_search(spec, jobs=args.jobs, checkpoint=args.checkpoint)
    print(res.summary())
    G = spec.G
    for r in res.results:
        if spec.target == "circulant-gw":
            print("  " + " ".join(G.format(x) for x in r))
        else:
            print("  " + " / ".join(" ".join(G.format(x) for x in row) for row in r))
    if args.out:
        print(f"manifest {write_results(res, args.out)}")
    return EXIT_OK


def cmd_table(args) -> int:
    if not 2 <= args.lo <= args.hi:
        raise UsageError("need 2 <= --from <= --to")
    rows = con.build_table(args.lo, args.hi)
    for r in rows:
        print(r.line())
    if args.out:
        d = Path(args.out)
        for r in rows:
            if r.witness is not None:
                write_matrix(d / f"bh{r.n}-z6.gmat", r.witness)
    return EXIT_FAIL if any(r.status == "construction-failed" for r in rows) else EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for m in catalog.catalog_index():
            q = f" q={m.q}" if m.q else ""
            print(f"{m.name:<14} {m.status:<10} {m.verdict:<4} {m.property}{q}  [{m.locus}]")
        return EXIT_OK
    if args.action == "show":
        if not args.name:
            raise UsageError("catalog show needs a name")
        e = catalog.catalog_get(args.name)
        if e.meta.notes:
            print(f"# {e.meta.notes}")
        sys.stdout.write(serialize(e.matrix))
        return EXIT_OK
    if args.action == "export":
        if not args.name:
            raise UsageError("catalog export needs a target directory")
        entries = catalog.export_catalog(args.name)
        print(f"exported {len(entries)} entries to {args.name}")
        return EXIT_OK
    # check
    bad = 0
    for m in catalog.catalog_index():
        rep = catalog.catalog_get(m.name).check()
        drift = rep.verdict != m.verdict
        wrong = m.status == "confirmed" and not rep.passed
        flag = "DRIFT" if drift else ("FAIL" if wrong else "ok")
        print(f"{m.name:<14} {m.status:<10} recorded={m.verdict} now={rep.verdict} {flag}")
        bad += drift or wrong
    return EXIT_FAIL if bad else EXIT_OK


# -- parser --------------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="grouporth", description="Verify, construct and search group-orthogonal matrices.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify a matrix file")
    v.add_argument("file")
    v.add_argument("--property", default="auto", choices=("auto",) + PROPERTIES)
    v.add_argument("--convention", default="right", choices=("right", "left"), help="quotient x*y^-1 or y^-1*x")
    v.add_argument("--q", type=int, help="root order for the Butson check")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="build a catalog entry or run a builder")
    c.add_argument("name")
    c.add_argument("inputs", nargs="*", help="input matrices (files or catalog names)")
    c.add_argument("--out", help="output matrix file")
    c.add_argument("--length", type=int, default=7, help="brock: 7 or 13; four-circulant: 5 or 7")
    c.add_argument("--repaired", action="store_true", help="gh10-z6: use the repaired first rows")
    c.add_argument("--star", default="conjugate-transpose", choices=con.STAR_MODES)
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("search", help="exhaustive search")
    s.add_argument("target", choices=("balance-gh", "circulant-gw"))
    s.add_argument("--v", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--b", type=int, help="columns (balance-gh; default v)")
    s.add_argument("--group", default="z3")
    s.add_argument("--limit", type=int)
    s.add_argument("--no-normalize", action="store_true")
    s.add_argument("--prefix-depth", type=int, default=0)
    s.add_argument("--max-size", type=int, default=24, help="desk bound on v*|G| for balance-gh")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--checkpoint")
    s.add_argument("--out", help="directory for result files and manifest")
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("table", help="rebuild the GH(n;Z6) existence table")
    t.add_argument("--from", dest="lo", type=int, default=2)
    t.add_argument("--to", dest="hi", type=int, default=52)
    t.add_argument("--out", help="directory for witness files")
    t.set_defaults(func=cmd_table)

    g = sub.add_parser("catalog", help="list, show, export or check fixtures")
    g.add_argument("action", choices=("list", "show", "export", "check"))
    g.add_argument("name", nargs="?")
    g.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        return args.func(args)
    except (MatrixFormatError, UsageError, catalog.CatalogError, SearchError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (VerifyError, MatrixError, GroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
