"""Reading and writing complexes and matrices.

Complex JSON: an array of arrays of positive integers (generating sets; the
downward closure is taken on load). Edge lists: one whitespace separated
pair per line; a line with a single id adds an isolated vertex; blank lines
and ``#`` comments are skipped.

Matrix JSON: array of rows, one row per line, entries integers or ``"p/q"``
strings. Matrix CSV: comma separated rows with the same entry syntax.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .complex import Complex, generate
from .errors import InputFormatError, SimspecError


def parse_complex_json(text: str) -> Complex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, list) or not data:
        raise InputFormatError("line 1 column 1: expected a nonempty array of vertex sets")
    for i, item in enumerate(data):
        if not isinstance(item, list) or not item:
            raise InputFormatError(f"set #{i}: expected a nonempty array of vertex ids")
        for v in item:
            if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
                raise InputFormatError(f"set #{i}: vertex id {v!r} is not a positive integer")
    return generate(data)


def parse_edges(text: str) -> Complex:
    sets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) > 2:
            raise InputFormatError(f"line {lineno}: expected a vertex pair, got {len(tokens)} fields")
        try:
            ids = [int(t) for t in tokens]
        except ValueError:
            raise InputFormatError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if any(v <= 0 for v in ids):
            raise InputFormatError(f"line {lineno}: vertex ids must be positive")
        sets.append(ids)
    if not sets:
        raise InputFormatError("line 1: edge list is empty")
    return generate(sets)


def detect_format(path: str | Path) -> str:
    return "edges" if str(path).endswith(".edges") else "json"


def load_complex(path: str | Path, fmt: str | None = None) -> Complex:
    fmt = fmt or detect_format(path)
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SimspecError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edges(text) if fmt == "edges" else parse_complex_json(text)


def complex_to_json(K: Complex) -> str:
    return json.dumps(K.as_sets()) + "\n"


def _entry(v) -> int | str:
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return int(v)


def matrix_to_json(M) -> str:
    rows = [json.dumps([_entry(v) for v in row]) for row in np.asarray(M, dtype=object)]
    return "[\n" + ",\n".join("  " + r for r in rows) + "\n]\n"


def matrix_to_csv(M) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in np.asarray(M, dtype=object):
        writer.writerow([_entry(v) for v in row])
    return buf.getvalue()


def _parse_entry(v, where: str):
    if isinstance(v, bool):
        raise InputFormatError(f"{where}: boolean is not a matrix entry")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            f = Fraction(v.strip())
        except ValueError:
            raise InputFormatError(f"{where}: bad entry {v!r}") from None
        return f.numerator if f.denominator == 1 else f
    raise InputFormatError(f"{where}: bad entry {v!r}")


def _to_array(rows: list[list]) -> np.ndarray:
    if not rows or len({len(r) for r in rows}) != 1:
        raise InputFormatError("matrix rows must be nonempty and of equal length")
    out = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, r in enumerate(rows):
        out[i] = r
    return out


def matrix_from_json(text: str) -> np.ndarray:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputFormatError("expected an array of rows")
    return _to_array(
        [[_parse_entry(v, f"row {i} column {j}") for j, v in enumerate(r)] for i, r in enumerate(data)]
    )


def matrix_from_csv(text: str) -> np.ndarray:
    rows = []
    for i, r in enumerate(csv.reader(io.StringIO(text)), start=1):
        if r:
            rows.append([_parse_entry(v, f"line {i} column {j + 1}") for j, v in enumerate(r)])
    return _to_array(rows)
