"""Flat-file formats: point files, edge files, and the JSON dilation report.

Point and edge files are line oriented: ASCII-whitespace-separated
tokens, ``#`` starts a comment, blank lines are skipped, LF or CRLF both
work.  JSON reports print floats with 17 significant digits so they
round-trip bit for bit.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import GeometryError
from .geometry import PointSet
from .graphs import DilationReport


def _payload(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_points(text: str) -> PointSet:
    """One point per non-comment line; 1 or 2 columns, constant across lines."""
    rows: list[list[float]] = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _payload(raw)
        if not body:
            continue
        tokens = body.split()
        if width is None:
            width = len(tokens)
            if width not in (1, 2):
                raise GeometryError(f"line {lineno}: expected 1 or 2 columns, got {width}")
        elif len(tokens) != width:
            raise GeometryError(
                f"line {lineno}: inconsistent column count ({len(tokens)} vs {width})"
            )
        try:
            rows.append([float(t) for t in tokens])
        except ValueError as exc:
            raise GeometryError(f"line {lineno}: non-numeric token") from exc
    if not rows:
        raise GeometryError("empty point file")
    return PointSet(rows)


def format_points(pts: PointSet) -> str:
    return "".join(" ".join(_fmt(c) for c in row) + "\n" for row in pts.coords)


def parse_edges(text: str) -> list[tuple[int, int]]:
    """One directed "u v" pair per non-comment line, 0-based indices."""
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _payload(raw)
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 2:
            raise GeometryError(f"line {lineno}: expected 'u v', got {len(tokens)} tokens")
        try:
            edges.append((int(tokens[0]), int(tokens[1])))
        except ValueError as exc:
            raise GeometryError(f"line {lineno}: non-integer index") from exc
    return edges


def format_edges(edges) -> str:
    return "".join(f"{u} {v}\n" for u, v in edges)


def _fmt(x: float) -> str:
    # 17 significant digits always round-trip an IEEE double.
    return format(float(x), ".17g")


def _json_value(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return _fmt(x)
    if isinstance(x, str):
        return '"' + x.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_json_value(v) for v in x) + "]"
    if isinstance(x, dict):
        return "{" + ", ".join(f'{_json_value(k)}: {_json_value(v)}' for k, v in x.items()) + "}"
    raise TypeError(f"cannot serialise {type(x)!r}")


def report_to_json(report: DilationReport) -> str:
    """Serialise a dilation report; infinite dilation becomes null + finite:false."""
    finite = report.finite
    obj: dict = {
        "dilation": report.dilation if finite else None,
        "witness": [report.witness[0], report.witness[1]],
        "cycle_length": report.cycle_length if math.isfinite(report.cycle_length) else None,
        "finite": finite,
    }
    if report.pairs is not None:
        obj["pairs"] = [
            {
                "pair": [p.i, p.j],
                "roundtrip": p.roundtrip if math.isfinite(p.roundtrip) else None,
                "triangle": p.triangle,
                "odil": p.odil if math.isfinite(p.odil) else None,
            }
            for p in report.pairs
        ]
    return _json_value(obj) + "\n"
