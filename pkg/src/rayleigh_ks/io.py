"""Readers and writers for the on-disk formats.

Vectors file::

    d m
    1 0
    0 1/2 *sqrt(2)      # optional per-vector scale factor sqrt(q)

Distribution JSON: {"m": 2, "support": [{"set": [0], "p": "1/2"}, ...]}.
Matrix file: one row per line, whitespace-separated rationals or decimals.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from fractions import Fraction
from pathlib import Path

from .errors import InvalidDistribution, InvalidInput
from .measures import SubsetDistribution
from .stablepoly.vectors import VectorSystem, from_scaled_vectors

_SCALE = re.compile(r"\*\s*sqrt\(\s*([^)]+)\s*\)\s*$")


def _number(tok: str, where: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"{where}: cannot parse {tok!r} as a rational") from exc


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_vectors(text: str) -> VectorSystem:
    rows = list(_lines(text))
    if not rows:
        raise InvalidInput("vectors file is empty")
    header = rows[0][1].split()
    if len(header) != 2:
        raise InvalidInput("first line must be 'd m'")
    d, m = (int(_number(t, "header")) for t in header)
    body = rows[1:]
    if len(body) != m:
        raise InvalidInput(f"header promises {m} vectors, found {len(body)}")
    vectors, scales = [], []
    for lineno, line in body:
        where = f"line {lineno}"
        scale = Fraction(1)
        match = _SCALE.search(line)
        if match:
            scale = _number(match.group(1), where)
            if scale <= 0:
                raise InvalidInput(f"{where}: scale must be positive")
            line = line[: match.start()]
        vec = [_number(t, where) for t in line.split()]
        if len(vec) != d:
            raise InvalidInput(f"{where}: expected {d} entries, got {len(vec)}")
        vectors.append(vec)
        scales.append(scale)
    if m == 0:
        raise InvalidInput("vectors file lists no vectors")
    if all(s == 1 for s in scales):
        return VectorSystem.from_vectors(vectors, d)
    return from_scaled_vectors(vectors, scales, d)


def read_vectors(path) -> VectorSystem:
    return parse_vectors(Path(path).read_text())


def read_distribution(path) -> SubsetDistribution:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidDistribution(f"{path}: invalid JSON ({exc})") from exc
    return SubsetDistribution.from_json(data)


def parse_matrix(text: str) -> list[list[Fraction]]:
    rows = [[_number(t, f"line {n}") for t in line.split()] for n, line in _lines(text)]
    if not rows or any(len(r) != len(rows) for r in rows):
        raise InvalidInput("matrix file must hold a nonempty square matrix")
    return rows


def read_matrix(path) -> list[list[Fraction]]:
    return parse_matrix(Path(path).read_text())


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_atomic(path, text: str) -> None:
    """Write to a temporary file in the target directory, then rename over the target."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
