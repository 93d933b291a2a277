"""Plain-text interchange format for group matrices.

::

    # comment lines and blank lines are ignored
    group: roots6
    semantics: multiplicative
    rows: 2
    cols: 2
    1 1
    1 -1

The four header keys appear once each, in this order, before the entries.
Each following line is one matrix row of whitespace-separated element tokens.
``.`` marks a design-zero and ``*`` a wildcard.  ``serialize`` emits the
canonical form (canonical tokens, single spaces, no comments), and parsing
it back yields an equal matrix.
"""

from __future__ import annotations

import re
from pathlib import Path

from .gmatrix import GMatrix, MatrixError
from .groups import GroupError, make_group

HEADER_KEYS = ("group", "semantics", "rows", "cols")
SEMANTICS = ("additive", "multiplicative")


class MatrixFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def serialize(M: GMatrix) -> str:
    lines = [
        f"group: {M.group.name}",
        f"semantics: {M.semantics}",
        f"rows: {M.rows}",
        f"cols: {M.cols}",
    ]
    lines += [" ".join(r) for r in M.tokens()]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> GMatrix:
    header: dict[str, str] = {}
    rows: list[list[int]] = []
    group = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if len(header) < len(HEADER_KEYS):
            key, sep, value = line.partition(":")
            expected = HEADER_KEYS[len(header)]
            if not sep or key.strip() != expected:
                raise MatrixFormatError(f"expected header key '{expected}:'", lineno, 1)
            value = value.strip()
            if expected == "group":
                try:
                    group = make_group(value)
                except GroupError as exc:
                    raise MatrixFormatError(str(exc), lineno, raw.index(":") + 2) from None
            elif expected == "semantics":
                if value not in SEMANTICS:
                    raise MatrixFormatError(f"semantics must be one of {SEMANTICS}", lineno, raw.index(":") + 2)
            else:
                if not value.isdigit() or int(value) < 1:
                    raise MatrixFormatError(f"'{expected}' must be a positive integer", lineno, raw.index(":") + 2)
            header[expected] = value
            continue
        row = []
        for m in re.finditer(r"\S+", raw):
            try:
                row.append(group.parse(m.group()))
            except GroupError:
                raise MatrixFormatError(f"unknown token {m.group()!r} for group {group}", lineno, m.start() + 1) from None
        if len(row) != int(header["cols"]):
            raise MatrixFormatError(f"row has {len(row)} entries, header says cols: {header['cols']}", lineno)
        rows.append(row)
    if len(header) < len(HEADER_KEYS):
        raise MatrixFormatError(f"missing header key '{HEADER_KEYS[len(header)]}:'")
    if len(rows) != int(header["rows"]):
        raise MatrixFormatError(f"found {len(rows)} entry rows, header says rows: {header['rows']}")
    try:
        return GMatrix(group, rows, header["semantics"])
    except MatrixError as exc:  # pragma: no cover - parse already checks entries
        raise MatrixFormatError(str(exc)) from None


def read_matrix(path) -> GMatrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))


def write_matrix(path, M: GMatrix) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize(M), encoding="utf-8")
    return path
