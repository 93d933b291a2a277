"""Named fixtures shipped as matrix files.

Layout of the fixture directory (``GROUPORTH_FIXTURES`` overrides it)::

    index.json        list of entries: name, file, property, q, locus,
                      status, verdict, notes
    <name>.gmat       one matrix per entry in the text interchange format

``status`` is ``confirmed`` (the entry must pass its property) or
``diagnostic`` (the recorded ``verdict`` is whatever exact verification
found; it is a frozen observation, not a claim).
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass
from functools import lru_cache
from pathlib import Path

from . import classical
from . import constructions as con
from .gmatrix import GMatrix, circulant
from .search import search_circulant_gw
from .textio import read_matrix, serialize
from .verify import VerificationReport, verify, verify_block_design

ENV_VAR = "GROUPORTH_FIXTURES"


class CatalogError(KeyError):
    def __str__(self) -> str:
        return self.args[0]


@dataclass(frozen=True)
class CatalogMeta:
    name: str
    file: str
    property: str
    locus: str
    status: str
    verdict: str
    notes: str = ""
    q: int | None = None


@dataclass(frozen=True)
class CatalogEntry:
    meta: CatalogMeta
    matrix: GMatrix

    @property
    def name(self) -> str:
        return self.meta.name

    def check(self) -> VerificationReport:
        return verify_entry(self.meta, self.matrix)


def fixture_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path(__file__).with_name("fixtures")


def verify_entry(meta: CatalogMeta, M: GMatrix) -> VerificationReport:
    if meta.property == "sbibd":
        return verify_block_design(M, symmetric=True)
    return verify(M, meta.property, q=meta.q)


@lru_cache(maxsize=None)
def _index(root: str) -> tuple[CatalogMeta, ...]:
    path = Path(root) / "index.json"
    if not path.exists():
        raise CatalogError(f"no catalog index at {path}")
    return tuple(CatalogMeta(**e) for e in json.loads(path.read_text(encoding="utf-8")))


def catalog_index() -> list[CatalogMeta]:
    return list(_index(str(fixture_dir())))


def catalog_names() -> list[str]:
    return [m.name for m in catalog_index()]


def catalog_get(name: str) -> CatalogEntry:
    for meta in catalog_index():
        if meta.name == name:
            return CatalogEntry(meta, read_matrix(fixture_dir() / meta.file))
    raise CatalogError(f"unknown catalog entry {name!r}; available: {', '.join(catalog_names())}")


def catalog_matrix(name: str) -> GMatrix:
    return catalog_get(name).matrix


# -- regeneration from the builders ----------------------------------------------------------


def gw17_z3() -> GMatrix:
    row = search_circulant_gw(17, 16, "z3", limit=1).results[0]
    return circulant("z3", row)


def _sources():
    """(meta fields, builder) for every entry, in index order."""
    gw17 = gw17_z3()
    C = con.gw13_s3("a2b3")
    return [
        (dict(name="gh20", property="balance", status="diagnostic",
              locus="orthogonality definitions, group orthogonality: explicit order-20 example",
              notes="printed label says Z4 but the entries use five symbols, so it is read over Z5; "
                    "as printed 75 of 190 row pairs are unbalanced; see gh20-repaired"),
         con.gh20_printed),
        (dict(name="gh20-repaired", property="balance", status="confirmed",
              locus="orthogonality definitions, group orthogonality: explicit order-20 example",
              notes="printed matrix with 18 cells changed (row 15 cols 9-10; rows 16-19 cols 16-19 lowered by 1 mod 5); "
                    "the unique nearest balanced completion of the first 15 rows"),
         con.gh20_repaired),
        (dict(name="klein4", property="balance", status="confirmed",
              locus="orthogonality definitions, group orthogonality: 4x4 over Z2 x Z2"),
         lambda: GMatrix.from_tokens("klein", [r.split() for r in con.KLEIN4])),
        (dict(name="h4", property="real", status="confirmed", locus="orthogonality definitions, classical orthogonality"),
         con.h4),
        (dict(name="bh2", property="real", status="confirmed", locus="order-2 real Hadamard matrix, Table factor"),
         lambda: classical.sylvester(2)),
        (dict(name="butson3", property="butson", q=3, status="confirmed", locus="orthogonality definitions, Butson orthogonality"),
         lambda: GMatrix.from_tokens("roots3", [r.split() for r in con.BUTSON3])),
        (dict(name="complex-a", property="complex", status="confirmed", locus="orthogonality definitions, complex orthogonality (A)"),
         lambda: GMatrix.from_tokens("roots4", [r.split() for r in con.COMPLEX_A])),
        (dict(name="complex-b", property="complex", status="confirmed", locus="orthogonality definitions, complex orthogonality (B)"),
         lambda: GMatrix.from_tokens("roots4", [r.split() for r in con.COMPLEX_B])),
        (dict(name="quaternion-v", property="quaternion", status="confirmed",
              locus="orthogonality definitions, quaternion orthogonality",
              notes="Gram constant printed as Z; computed exactly as 2"),
         lambda: GMatrix.from_tokens("q8", [r.split() for r in con.QUATERNION_V])),
        (dict(name="gh6-z3", property="balance", status="confirmed", locus="design definitions, difference matrix example"),
         lambda: GMatrix.from_tokens("z3", con.GH6_Z3)),
        (dict(name="gh7-z6-a", property="butson", q=6, status="confirmed", locus="GH(7;Z6) examples, left matrix"),
         lambda: con.gh7("a")),
        (dict(name="gh7-z6-b", property="butson", q=6, status="confirmed", locus="GH(7;Z6) examples, right matrix"),
         lambda: con.gh7("b")),
        (dict(name="gh10-z6", property="butson", q=6, status="confirmed",
              locus="GH(10;Z6) construction, [[X,Y],[W,Z]] of circulants",
              notes="printed rows admit no balanced assignment; the fourth row's third entry is changed from -w^2 to -w; "
                    "first of 8 passing assignments: X=r0 Y=r1 Z=r3 W=r2"),
         con.gh10_z6),
        (dict(name="brock7", property="balance", status="confirmed", locus="circulant list, Brock vectors of length 7"),
         lambda: con.build_brock(7)[0]),
        (dict(name="brock13", property="balance", status="diagnostic", locus="circulant list, Brock vectors of length 13",
              notes="312 of 741 row pairs unbalanced"),
         lambda: con.build_brock(13)[0]),
        (dict(name="residue39", property="balance", status="diagnostic",
              locus="cubic residues of 13, Brock's 3 x 13 matrix",
              notes="block (0,2) has no C1 term as printed, so its C1 positions are design-zeros"),
         lambda: con.build_residue_39()[0]),
        (dict(name="gw13-s3", property="gw", status="diagnostic", locus="other strange squares, S3 weighing circulant",
              notes="passes under presentation a2b3 for both quotient conventions; fails all 78 pairs under a3b2"),
         lambda: C),
        (dict(name="strange13", property="real", status="diagnostic",
              locus="other strange squares, wildcard circulant",
              notes="passes with pairwise wildcard masking, c = 9"),
         con.strange13),
        (dict(name="gw17-z3", property="gw", status="confirmed",
              locus="plug-in doubling input C, found by circulant search",
              notes="first row in search order; symmetric"),
         lambda: gw17),
        (dict(name="bh34-z6", property="butson", q=6, status="confirmed", locus="plug-in doubling of gw17-z3"),
         lambda: con.plugin_double(gw17)[0]),
        (dict(name="fano7", property="sbibd", status="confirmed",
              locus="symmetric design example (Fano plane) over the trivial group"),
         lambda: circulant("z1", "0 0 . 0 . . .".split())),
    ]


def build_catalog() -> list[CatalogEntry]:
    out = []
    for fields, build in _sources():
        M = build()
        meta = CatalogMeta(file=f"{fields['name']}.gmat", verdict="", **fields)
        meta = CatalogMeta(**{**asdict(meta), "verdict": verify_entry(meta, M).verdict})
        out.append(CatalogEntry(meta, M))
    return out


def export_catalog(outdir) -> list[CatalogEntry]:
    """Write every fixture plus index.json; returns the entries written."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    entries = build_catalog()
    for e in entries:
        (outdir / e.meta.file).write_text(serialize(e.matrix), encoding="utf-8")
    index = [asdict(e.meta) for e in entries]
    (outdir / "index.json").write_text(json.dumps(index, indent=2) + "\n", encoding="utf-8")
    _index.cache_clear()
    return entries
