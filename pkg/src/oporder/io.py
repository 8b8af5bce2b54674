"""JSON matrix files: {"rows": m, "cols": n, "data": [[[re, im], ...], ...]}."""

from __future__ import annotations

import json
import math
import os
from typing import Union

import numpy as np

from .core import as_matrix

__all__ = ["MatrixFileError", "dumps_matrix", "loads_matrix", "write_matrix", "read_matrix"]


class MatrixFileError(ValueError):
    """Malformed or inconsistent matrix file."""


def _fmt(x: float) -> str:
    # 17 significant digits round-trip any double exactly.
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return "%.17g" % x


def dumps_matrix(M) -> str:
    M = as_matrix(M)
    m, n = M.shape
    rows = []
    for i in range(m):
        cells = ", ".join(
            f"[{_fmt(float(M[i, j].real))}, {_fmt(float(M[i, j].imag))}]" for j in range(n)
        )
        rows.append(f"    [{cells}]")
    body = ",\n".join(rows)
    if rows:
        data = "[\n" + body + "\n  ]"
    else:
        data = "[]"
    return '{\n  "rows": %d,\n  "cols": %d,\n  "data": %s\n}\n' % (m, n, data)


def loads_matrix(text: str) -> np.ndarray:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise MatrixFileError("top level must be an object")
    for key in ("rows", "cols", "data"):
        if key not in obj:
            raise MatrixFileError(f"missing key {key!r}")
    rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    if (
        not isinstance(rows, int)
        or not isinstance(cols, int)
        or isinstance(rows, bool)
        or isinstance(cols, bool)
        or rows < 0
        or cols < 0
    ):
        raise MatrixFileError("rows and cols must be non-negative integers")
    if not isinstance(data, list) or len(data) != rows:
        raise MatrixFileError(f"data must hold {rows} rows")
    M = np.zeros((rows, cols), dtype=complex)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise MatrixFileError(f"row {i} must hold {cols} entries")
        for j, cell in enumerate(row):
            if (
                not isinstance(cell, list)
                or len(cell) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in cell)
            ):
                raise MatrixFileError(f"entry ({i}, {j}) must be a [re, im] pair")
            re, im = float(cell[0]), float(cell[1])
            if not (math.isfinite(re) and math.isfinite(im)):
                raise MatrixFileError(f"entry ({i}, {j}) is not finite")
            M[i, j] = complex(re, im)
    return M


def write_matrix(path: Union[str, os.PathLike], M) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_matrix(M))


def read_matrix(path: Union[str, os.PathLike]) -> np.ndarray:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixFileError(f"cannot read {path}: {exc}") from exc
    return loads_matrix(text)
