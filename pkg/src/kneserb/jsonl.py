"""JSON-lines coloring files.

Line 1 is a header ``{"m":..,"n":..,"colors":..,"construction":..}``; each
following line is ``{"vertex":[sorted elements],"color":{"subset":[..]}}`` or
``{"color":{"synthetic":k}}``, one per vertex in colex order.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from typing import IO

from .coloring import Coloring, label_from_json, label_to_json
from .combinatorics import from_elements, to_elements
from .kneser import KneserParams


class ColoringFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def coloring_lines(c: Coloring) -> Iterable[str]:
    p = c.params
    yield _dumps({"m": p.m, "n": p.n, "colors": c.color_count, "construction": c.construction})
    for v, label in zip(p.vertices(), c.labels):
        yield _dumps({"vertex": to_elements(v), "color": label_to_json(label)})


def dump_coloring(c: Coloring, fp: IO[str]) -> None:
    for line in coloring_lines(c):
        fp.write(line + "\n")


def _parse(raw: str, lineno: int):
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ColoringFormatError(f"invalid JSON ({exc.msg})", lineno) from None


def load_coloring(fp: IO[str]) -> Coloring:
    lines = iter(enumerate(fp, start=1))
    try:
        lineno, raw = next(lines)
    except StopIteration:
        raise ColoringFormatError("empty file", 1) from None
    header = _parse(raw, lineno)
    if not isinstance(header, dict) or not isinstance(header.get("m"), int) or not isinstance(header.get("n"), int):
        raise ColoringFormatError("header must be an object with integer m and n", lineno)
    try:
        p = KneserParams(header["m"], header["n"])
    except ValueError as exc:
        raise ColoringFormatError(str(exc), lineno) from None

    assignment = {}
    for lineno, raw in lines:
        if not raw.strip():
            continue
        record = _parse(raw, lineno)
        if not isinstance(record, dict) or "vertex" not in record or "color" not in record:
            raise ColoringFormatError('record needs "vertex" and "color"', lineno)
        elems = record["vertex"]
        if (
            not isinstance(elems, list)
            or not all(isinstance(e, int) and 0 <= e < p.m for e in elems)
            or len(set(elems)) != p.n
            or len(elems) != p.n
        ):
            raise ColoringFormatError(f"vertex {elems!r} is not an {p.n}-subset of [{p.m}]", lineno)
        v = from_elements(elems)
        if v in assignment:
            raise ColoringFormatError(f"vertex {sorted(elems)} colored twice", lineno)
        try:
            label = label_from_json(record["color"])
        except ValueError as exc:
            raise ColoringFormatError(str(exc), lineno) from None
        assignment[v] = label

    if len(assignment) != p.num_vertices:
        raise ColoringFormatError(f"incomplete assignment: {len(assignment)} of {p.num_vertices} vertices colored")
    construction = header.get("construction")
    return Coloring(p, tuple(assignment[v] for v in p.vertices()), construction=construction)
