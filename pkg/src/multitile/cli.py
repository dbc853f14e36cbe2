"""Command-line driver.

Exit codes: 0 success, 2 input error, 3 not a Z^n-tiling, 4 inconclusive.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus
from .decompose import Status, decompose, digit_column_sets
from .io import (
    ParseError,
    ValidationError,
    digits_from_json,
    digits_to_json,
    dumps,
    format_rat,
    parse_matrix,
    parse_problem,
    region_from_json,
    region_to_json,
    result_to_json,
    load_json,
)
from .lattice import InvalidMatrix
from .region import Region
from .svg import render_svg
from .synth import DigitSystem, attractor_sequence, excess_measures
from .tiling import is_lattice_tiling, multiplicity_table

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_TILING = 3
EXIT_INCONCLUSIVE = 4


class InputError(Exception):
    pass


def _lattice_name(dim: int) -> str:
    return "Z" if dim == 1 else "Z²"


def _pt(shift) -> str:
    return str(shift[0]) if len(shift) == 1 else "(" + ", ".join(map(str, shift)) + ")"


def _pts(shifts) -> str:
    return "{" + ", ".join(_pt(s) for s in sorted(shifts)) + "}"


def _region_str(R: Region) -> str:
    if R.dim == 1:
        return " u ".join(f"[{format_rat(a)}, {format_rat(b)}]" for a, b in R.cells)
    return " u ".join(
        "conv{" + ", ".join(f"({format_rat(x)}, {format_rat(y)})" for x, y in c) + "}"
        for c in R.cells)


def _read_problem(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_problem(text)
    except (ParseError, ValidationError) as exc:
        raise InputError(f"{path}: {type(exc).__name__}: {exc}") from None


def cmd_check(args, out) -> int:
    problem = _read_problem(args.file)
    K = problem.region
    tiles = is_lattice_tiling(K)
    print(f"tiles {_lattice_name(K.dim)}: {'yes' if tiles else 'no'}, |K| = {format_rat(K.measure)}", file=out)
    print("shift  folded measure", file=out)
    for shift, m in multiplicity_table(K):
        print(f"{_pt(shift):>5}  {format_rat(m)}", file=out)
    return EXIT_OK if tiles else EXIT_NOT_TILING


def cmd_decompose(args, out) -> int:
    problem = _read_problem(args.file)
    max_depth = args.max_depth if args.max_depth is not None else problem.max_depth
    try:
        result = decompose(problem.region, problem.matrix, max_depth)
    except InvalidMatrix as exc:
        raise InputError(str(exc)) from None
    if args.json:
        out.write(dumps(result_to_json(result, problem.region, problem.matrix)))
    else:
        print(f"status: {result.status.value}", file=out)
        if result.status is Status.SELF_AFFINE:
            print(f"N = {len(result.partition)}", file=out)
            print(f"m0 = {result.m0}", file=out)
            for i, atom in enumerate(result.partition, 1):
                print(f"W_{i} = {_region_str(atom)}", file=out)
            M = result.digits.M
            for i in range(M):
                for j in range(M):
                    if result.digits[i, j]:
                        print(f"Gamma_{i + 1}{j + 1} = {_pts(result.digits[i, j])}", file=out)
            for j, D in enumerate(digit_column_sets(result.digits), 1):
                print(f"D_{j} = {_pts(D)}", file=out)
        else:
            if result.depth is not None:
                print(f"depth: {result.depth}", file=out)
            if result.message:
                print(f"reason: {result.message}", file=out)
            for t in result.trace:
                print(f"level {t.level}: {len(t.translates)} translates, "
                      f"{len(t.cutting)} cutting, {t.atoms} atoms", file=out)
    if args.svg and result.status is Status.SELF_AFFINE:
        render_svg(result.partition.atoms, args.svg, "minimal partition")
    return {
        Status.SELF_AFFINE: EXIT_OK,
        Status.NOT_LATTICE_TILING: EXIT_NOT_TILING,
        Status.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }[result.status]


def cmd_render(args, out) -> int:
    problem = _read_problem(args.file)
    regions = [problem.region]
    if args.atoms:
        result = decompose(problem.region, problem.matrix, problem.max_depth)
        if result.status is not Status.SELF_AFFINE:
            print(f"status: {result.status.value}; rendering the undivided region", file=out)
        else:
            regions = list(result.partition.atoms)
    render_svg(regions, args.out)
    print(f"wrote {args.out}", file=out)
    return EXIT_OK


def _read_system(path):
    try:
        data = load_json(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        dim = data["dim"]
        if dim not in (1, 2):
            raise ValidationError("dim must be 1 or 2")
        B = parse_matrix(data["matrix"], dim)
        digits = digits_from_json(data["digits"], dim)
        seed = region_from_json(data["seed"], dim, "seed") if "seed" in data else None
        return DigitSystem(B, digits), seed
    except KeyError as exc:
        raise InputError(f"{path}: missing field {exc}") from None
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_synthesize(args, out) -> int:
    reference = None
    fixture = None
    if args.example:
        try:
            fixture = corpus.paper_example(args.example)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
        system, seed = DigitSystem(fixture.B, fixture.digits), None
        reference = fixture.K
    elif args.system:
        system, seed = _read_system(args.system)
    else:
        raise InputError("give --example ID or --system FILE")
    if args.depth < 0:
        raise InputError("--depth must be >= 0")
    seq = attractor_sequence(system, seed, args.depth)
    errors = excess_measures(seq, reference)
    if args.json:
        payload = {
            "dim": system.B.n,
            "matrix": system.B.tolist(),
            "digits": digits_to_json(system.digits),
            "depth": args.depth,
            "approximation": region_to_json(seq[-1]),
            "errors": [format_rat(e) for e in errors],
            "reference": "fixture" if reference is not None else "previous",
        }
        if fixture is not None:
            payload["example"] = fixture.id
            payload["atoms"] = [region_to_json(a) for a in fixture.atoms]
        out.write(dumps(payload))
    else:
        if fixture is not None:
            print(f"example {fixture.id}: {fixture.description}", file=out)
            for i, atom in enumerate(fixture.atoms, 1):
                print(f"K_{i} = {_region_str(atom)}", file=out)
            for i in range(fixture.digits.M):
                for j in range(fixture.digits.M):
                    if fixture.digits[i, j]:
                        print(f"Gamma_{i + 1}{j + 1} = {_pts(fixture.digits[i, j])}", file=out)
            for j, D in enumerate(digit_column_sets(fixture.digits), 1):
                print(f"D_{j} = {_pts(D)}", file=out)
        print(f"depth {args.depth} approximation: {_region_str(seq[-1]) or 'empty'}", file=out)
        label = "excess over K" if reference is not None else "excess over previous"
        print(f"{label}: {', '.join(format_rat(e) for e in errors) or '-'}", file=out)
    if args.svg:
        render_svg([seq[-1]], args.svg, f"depth {args.depth}")
    return EXIT_OK


def cmd_examples(args, out) -> int:
    for fid in corpus.FIXTURE_IDS:
        if fid.startswith("ex34"):
            print(f"{fid}  K = [-p/q, 1 - p/q], B = 2 (coprime 1 <= p < q)", file=out)
        else:
            print(f"{fid}  {corpus.paper_example(fid).description}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multitile", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test whether the region tiles by Z^n")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="minimal self-affine decomposition")
    p.add_argument("file")
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--json", action="store_true", help="canonical JSON on stdout")
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("render", help="draw the region (or its minimal atoms) as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--atoms", action="store_true", help="decompose first and colour each atom")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("synthesize", help="approximate the attractor of a digit system")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--example", metavar="ID")
    src.add_argument("--system", metavar="FILE")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("examples", help="built-in examples")
    p.add_argument("action", choices=["list"])
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
