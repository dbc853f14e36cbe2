"""JSON problem/result formats with rationals written as "p/q" strings."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .decompose import (
    DEFAULT_MAX_DEPTH,
    DecompositionResult,
    DigitMatrix,
    Partition,
    Status,
    TraceLevel,
    digit_column_sets,
)
from .lattice import IntMatrix, det, is_expansive
from .region import Region

_RAT = re.compile(r"^[+-]?\d+(/\d+)?$")


class ParseError(ValueError):
    """Malformed input text or a field of the wrong shape."""


class ValidationError(ValueError):
    """Well-formed input describing an unusable problem."""


def format_rat(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(value, where: str = "value") -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(f"{where}: expected a rational string like \"-3/4\", got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    text = value.strip()
    if not _RAT.match(text):
        raise ParseError(f"{where}: {value!r} is not of the form ±p or ±p/q")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"{where}: zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def load_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be a JSON object")
    return data


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    return value


def parse_matrix(data, dim: int) -> IntMatrix:
    if not isinstance(data, list) or len(data) != dim:
        raise ParseError(f"matrix: expected {dim} rows")
    rows = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"matrix[{i}]: expected {dim} entries")
        rows.append(tuple(_int(v, f"matrix[{i}]") for v in row))
    return IntMatrix(tuple(rows))


def cells_to_raw(data, dim: int, where: str = "cells") -> list:
    if not isinstance(data, list):
        raise ParseError(f"{where}: expected a list of cells")
    raw = []
    for c, cell in enumerate(data):
        at = f"{where}[{c}]"
        if not isinstance(cell, list):
            raise ParseError(f"{at}: expected a list")
        if dim == 1:
            if len(cell) != 2:
                raise ParseError(f"{at}: an interval needs exactly 2 endpoints")
            raw.append(tuple(parse_rat(v, at) for v in cell))
        else:
            if len(cell) < 3:
                raise ParseError(f"{at}: a polygon needs at least 3 vertices")
            pts = []
            for k, v in enumerate(cell):
                if not isinstance(v, list) or len(v) != 2:
                    raise ParseError(f"{at}[{k}]: expected an [x, y] pair")
                pts.append(tuple(parse_rat(x, f"{at}[{k}]") for x in v))
            raw.append(pts)
    return raw


def region_from_json(data, dim: int, where: str = "cells") -> Region:
    raw = cells_to_raw(data, dim, where)
    try:
        return Region.from_cells(dim, raw)
    except ValueError as exc:
        raise ValidationError(f"{where}: {exc}") from None


def region_to_json(R: Region) -> list:
    if R.dim == 1:
        return [[format_rat(a), format_rat(b)] for a, b in R.cells]
    return [[[format_rat(x), format_rat(y)] for x, y in c] for c in R.cells]


def _dim(data) -> int:
    dim = _int(data.get("dim"), "dim")
    if dim not in (1, 2):
        raise ValidationError(f"dim: only 1 and 2 are supported, got {dim}")
    return dim


@dataclass(frozen=True)
class Problem:
    region: Region
    matrix: IntMatrix
    max_depth: int = DEFAULT_MAX_DEPTH


def parse_problem(text: str) -> Problem:
    data = load_json(text)
    for key in ("dim", "matrix", "cells"):
        if key not in data:
            raise ParseError(f"missing field {key!r}")
    dim = _dim(data)
    B = parse_matrix(data["matrix"], dim)
    if det(B) == 0:
        raise ValidationError("matrix: singular")
    if not is_expansive(B):
        raise ValidationError(f"matrix: {B.tolist()} is not expansive")
    region = region_from_json(data["cells"], dim)
    if region.is_empty():
        raise ValidationError("cells: region is empty")
    max_depth = data.get("max_depth", DEFAULT_MAX_DEPTH)
    if _int(max_depth, "max_depth") < 1:
        raise ValidationError("max_depth: must be >= 1")
    return Problem(region, B, max_depth)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def serialize_problem(problem: Problem) -> str:
    return dumps({
        "dim": problem.region.dim,
        "matrix": problem.matrix.tolist(),
        "cells": region_to_json(problem.region),
        "max_depth": problem.max_depth,
    })


def _points(shifts) -> list:
    return [list(s) for s in sorted(shifts)]


def digits_to_json(gamma: DigitMatrix) -> list:
    return [[_points(cell) for cell in row] for row in gamma.entries]


def digits_from_json(data, dim: int, where: str = "digits") -> DigitMatrix:
    if not isinstance(data, list):
        raise ParseError(f"{where}: expected a square list of lists")
    rows = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != len(data):
            raise ParseError(f"{where}[{i}]: expected {len(data)} entries")
        cells = []
        for j, cell in enumerate(row):
            if not isinstance(cell, list):
                raise ParseError(f"{where}[{i}][{j}]: expected a list of points")
            pts = set()
            for p in cell:
                if not isinstance(p, list) or len(p) != dim:
                    raise ParseError(f"{where}[{i}][{j}]: points must be lists of {dim} integers")
                pts.add(tuple(_int(v, f"{where}[{i}][{j}]") for v in p))
            cells.append(pts)
        rows.append(tuple(cells))
    return DigitMatrix(tuple(rows))


def result_to_json(result: DecompositionResult, K: Region, B: IntMatrix) -> dict:
    out = {
        "status": result.status.value,
        "dim": K.dim,
        "matrix": B.tolist(),
        "region": region_to_json(K),
        "message": result.message,
        "depth": result.depth,
        "trace": [{"level": t.level, "translates": [list(s) for s in t.translates],
                   "cutting": [list(s) for s in t.cutting], "atoms": t.atoms}
                  for t in result.trace],
    }
    if result.status is Status.SELF_AFFINE:
        out["prototiles"] = len(result.partition)
        out["m0"] = result.m0
        out["atoms"] = [region_to_json(a) for a in result.partition]
        out["digits"] = digits_to_json(result.digits)
        out["columns"] = [_points(D) for D in digit_column_sets(result.digits)]
    return out


def parse_result(text: str) -> DecompositionResult:
    data = load_json(text)
    dim = _dim(data)
    K = region_from_json(data["region"], dim, "region")
    status = Status(data["status"])
    trace = [TraceLevel(t["level"], tuple(tuple(s) for s in t["translates"]),
                        tuple(tuple(s) for s in t["cutting"]), t["atoms"]) for t in data["trace"]]
    result = DecompositionResult(status, depth=data["depth"], trace=trace, message=data["message"])
    if status is Status.SELF_AFFINE:
        atoms = [region_from_json(a, dim, f"atoms[{i}]") for i, a in enumerate(data["atoms"])]
        result.partition = Partition(tuple(atoms), K, sort=False)
        result.digits = digits_from_json(data["digits"], dim)
        result.m0 = data["m0"]
    return result
