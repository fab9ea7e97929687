"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import suites
from .group import GroupFamily, SignedPermutation
from .homotopy import DEFAULT_GRID, HomotopyFamily, character_curves
from .rep import build_representation, character, matrix_to_json
from .tableaux import FamilySpec, SkewShape, enumerate_family

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(suites.jsonable(obj), indent=2, sort_keys=True)


def _shape(args) -> SkewShape | None:
    if not args.shape:
        if args.inner:
            raise UsageError("--inner needs --shape")
        return None
    try:
        shape = SkewShape.parse(args.shape, args.inner or "")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.n is not None and args.n != shape.n:
        raise UsageError(f"--n {args.n} does not match the {shape.n} boxes of {shape}")
    return shape


def _rank(args, shape) -> int:
    n = shape.n if shape is not None else args.n
    if n is None:
        raise UsageError("give --n or --shape")
    return n


def _spec(args) -> FamilySpec:
    shape = _shape(args)
    if shape is None:
        raise UsageError("--shape is required")
    if args.variant is None:
        raise UsageError("--variant is required")
    sign = args.sign
    m = args.m if args.variant == "m" else 0
    if args.variant == "m" and m is None:
        m = 1
    try:
        return FamilySpec(args.group, shape, args.variant, sign, m or 0)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _grid(text: str | None):
    if not text:
        return DEFAULT_GRID
    try:
        xs = tuple(float(tok) for tok in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}") from exc
    if any(x < -1 for x in xs):
        raise UsageError("grid points must be >= -1")
    return xs


def cmd_enumerate(args) -> int:
    spec = _spec(args)
    tableaux = enumerate_family(spec)
    if args.format == "pretty":
        out = [f"{spec.label()}: {len(tableaux)} tableaux"]
        for T in tableaux:
            out.append("")
            out.append(T.render())
        print("\n".join(out))
    else:
        print(_dump({"family": spec.label(), "count": len(tableaux),
                     "tableaux": [T.to_dict() for T in tableaux]}))
    return EXIT_OK


def _build(args, spec):
    try:
        return build_representation(spec, args.normalization, args.backend)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_matrices(args) -> int:
    spec = _spec(args)
    rep = _build(args, spec)
    if args.format == "pretty":
        lines = [f"{spec.label()} ({args.normalization}), dim {rep.dim}"]
        for i in rep.labels:
            lines.append(f"s_{i}:")
            for row in matrix_to_json(rep.matrix(i), rep.exact):
                lines.append("  " + " ".join(f"{v:>10}" if isinstance(v, str) else f"{v:10.6f}" for v in row))
        print("\n".join(lines))
    else:
        print(_dump({
            "family": spec.label(),
            "normalization": rep.normalization,
            "backend": "exact" if rep.exact else "float",
            "basis": [T.to_dict() for T in rep.basis],
            "generators": {f"s_{i}": matrix_to_json(rep.matrix(i), rep.exact) for i in rep.labels},
        }))
    return EXIT_OK


def cmd_character(args) -> int:
    spec = _spec(args)
    rep = _build(args, spec)
    ch = character(rep)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["element", "value"])
        for w, v in ch.items():
            writer.writerow([str(w), str(v)])
        sys.stdout.write(buf.getvalue())
    else:
        print(_dump({"family": spec.label(), "character": ch.to_json()}))
    return EXIT_OK


def cmd_curves(args) -> int:
    shape = _shape(args)
    if shape is None:
        raise UsageError("--shape is required")
    if args.group == "D" and args.sign not in ("+", "-"):
        raise UsageError("D curves need --sign + or -")
    fam = HomotopyFamily(args.group, shape, args.sign)
    xs = _grid(args.grid)
    curves = character_curves(fam, xs)
    if args.element:
        try:
            w = SignedPermutation.parse(args.element)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if w not in curves:
            raise UsageError(f"{args.element} is not in {fam.group}")
        curves = {w: curves[w]}
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["element", "x", "trace"])
    for w in sorted(curves):
        for x, v in zip(xs, curves[w]):
            writer.writerow([str(w), repr(x), repr(v)])
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_verify(args) -> int:
    shape = _shape(args)
    n = _rank(args, shape)
    if n > args.max_n:
        raise UsageError(f"n = {n} is above --max-n {args.max_n}")
    kind = args.group
    try:
        GroupFamily(kind, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.sign and kind == "B":
        raise UsageError("B families carry no sign")
    suite = args.suite
    if suite == "relations":
        spec = _spec(args) if args.variant else None
        report = suites.relations(kind, n, spec)
    elif suite == "induction":
        report = suites.induction(kind, n, shape)
    elif suite == "decomposition":
        report = suites.decomposition(kind, n, shape, args.sign, args.m or 1)
    elif suite == "counts":
        report = suites.counts(kind, n)
    elif suite == "cells":
        report = suites.cells(kind, n, args.samples, args.seed)
    else:
        report = suites.homotopy(kind, n, shape, args.sign, _grid(args.grid))
    print(_dump(report))
    return EXIT_OK if report["ok"] else EXIT_FAIL


def _common(p: argparse.ArgumentParser, family=True):
    p.add_argument("--group", choices=("B", "D"), default="D")
    p.add_argument("--n", type=int)
    p.add_argument("--shape", help="outer partition, e.g. 2,1")
    p.add_argument("--inner", help="inner partition of a skew shape")
    p.add_argument("--sign", choices=("+", "-"))
    if family:
        p.add_argument("--variant", choices=("m", "box", "vbar", "hbar", "zero"))
        p.add_argument("--m", type=int)


def _rep_opts(p: argparse.ArgumentParser):
    p.add_argument("--normalization", choices=("orthogonal", "stochastic"), default="orthogonal")
    p.add_argument("--backend", choices=("exact", "float"))


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dyoung", description="D- and B-Young tableaux and their representations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list a tableau family")
    _common(p)
    p.add_argument("--format", choices=("json", "pretty"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("matrices", help="generator matrices of a family")
    _common(p)
    _rep_opts(p)
    p.add_argument("--format", choices=("json", "pretty"), default="json")
    p.set_defaults(func=cmd_matrices)

    p = sub.add_parser("character", help="character of a family over the whole group")
    _common(p)
    _rep_opts(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("curves", help="character curves of the homotopy family as CSV")
    _common(p, family=False)
    p.add_argument("--grid", help="comma-separated x values, each >= -1")
    p.add_argument("--element", help="restrict to one element, window form")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=suites.SUITES)
    _common(p)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--grid", help="homotopy grid, comma-separated x values")
    p.add_argument("--samples", type=int, help="cells: sample this many tableaux")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"dyoung: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
