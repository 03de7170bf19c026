"""Command-line interface.

    fusscat count ncp -p 6 -n 2
    fusscat enumerate chains -n 3 -m 2 --format json-lines
    fusscat triangle -p 3 -n 5
    echo 1,2,7,12/3,4,5,6/8,9,10,11 | fusscat biject --direction split
    echo 1,2,3/4,5,6 | fusscat tree --to-tree -p 3
    echo "1,4/2,3/5,6;1,4,5,6/2,3" | fusscat render --format svg
    fusscat verify --max-points 10

Exit status: 0 on success, 1 on bad usage or input, 2 when verification fails.
Set NO_COLOR to keep the verify table free of ANSI colour codes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, TextIO

from . import bijections, ptree
from .enumerate import FAMILIES, PartitionChain, count, parse_chain
from .numbers import triangle
from .partition import PartitionError, parse, serialize
from .render import render_svg, render_text
from .verify import verify_all

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2

# family -> parameters it takes, in generator order
FAMILY_PARAMS = {
    "nc": ("n",),
    "ncp": ("p", "n"),
    "multiple": ("p", "n"),
    "chains": ("n", "m"),
    "double": ("q", "n"),
    "mtuple": ("m", "p", "n"),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fusscat", description="Planar partitions and Fuss-Catalan numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def params(p, *names):
        for name in names:
            p.add_argument(f"-{name}", type=int, default=None)

    for name in ("count", "enumerate"):
        p = sub.add_parser(name)
        p.add_argument("family", choices=sorted(FAMILY_PARAMS))
        params(p, "p", "q", "m", "n")
        if name == "enumerate":
            p.add_argument("--format", choices=("text", "json-lines"), default="text")

    p = sub.add_parser("triangle", help="rows 0..n of F^p(n, k)")
    params(p, "p", "n")

    p = sub.add_parser("biject", help="map serialized objects read from stdin")
    p.add_argument("--direction", required=True,
                   choices=("split", "merge", "unfold", "fold", "mult2tuple", "tuple2mult"))
    params(p, "p", "q", "m")

    p = sub.add_parser("tree", help="convert between p-partitions and p-trees")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--to-tree", action="store_true")
    group.add_argument("--to-partition", action="store_true")
    group.add_argument("--outline", action="store_true", help="indented text rendering of trees")
    params(p, "p")

    p = sub.add_parser("render", help="draw a partition or chain as arcs and ties")
    p.add_argument("object", nargs="?", help="serialized partition or chain (default: stdin)")
    p.add_argument("--format", choices=("text", "svg"), default="text")
    p.add_argument("--comb", type=int, default=0, metavar="M",
                   help="draw I_2..I_M below the line (svg only)")

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--max-points", type=int, default=12)
    return parser


def _family_args(args) -> list[int]:
    values = []
    for name in FAMILY_PARAMS[args.family]:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"family {args.family!r} needs -{name}")
        if value < 0 or (name != "n" and value < 1):
            raise UsageError(f"-{name} out of range: {value}")
        values.append(value)
    extra = [k for k in "pqmn" if getattr(args, k) is not None and k not in FAMILY_PARAMS[args.family]]
    if extra:
        raise UsageError(f"family {args.family!r} takes no -{', -'.join(extra)}")
    return values


def _record(obj, family: str) -> dict:
    if isinstance(obj, PartitionChain):
        parts = [[list(b) for b in P.blocks] for P in obj]
        return {"n": obj.n, "blocks": parts[0], "family": family, "parts": parts}
    return {"n": obj.n, "blocks": [list(b) for b in obj.blocks], "family": family}


def _need(args, *names) -> list[int]:
    out = []
    for name in names:
        value = getattr(args, name)
        if value is None or value < 1:
            raise UsageError(f"--direction {args.direction} needs a positive -{name}")
        out.append(value)
    return out


def _lines(stream: TextIO) -> Iterable[str]:
    for line in stream:
        line = line.rstrip("\n")
        if line.strip():
            yield line


def _biject(args, stdin, stdout):
    d = args.direction
    if d == "split":
        convert = lambda s: bijections.split_even(parse(s))
    elif d == "merge":
        (q,) = _need(args, "q")
        convert = lambda s: bijections.merge_even(parse_chain(s), q)
    elif d == "unfold":
        (m,) = _need(args, "m")
        convert = lambda s: bijections.unfold_m(parse(s), m)
    elif d == "fold":
        m, p = _need(args, "m", "p")
        convert = lambda s: bijections.fold_m(parse_chain(s), m, p)
    elif d == "mult2tuple":
        (p,) = _need(args, "p")
        convert = lambda s: bijections.multiple_to_tuple(parse(s), p)
    else:
        (p,) = _need(args, "p")
        convert = lambda s: bijections.tuple_to_multiple(parse_chain(s), p)
    for line in _lines(stdin):
        stdout.write(f"{convert(line)}\n")


def _tree(args, stdin, stdout):
    if args.to_tree:
        if args.p is None or args.p < 1:
            raise UsageError("--to-tree needs a positive -p")
        for line in _lines(stdin):
            stdout.write(f"{ptree.tree_of_partition(parse(line), args.p)}\n")
    else:
        for line in _lines(stdin):
            T = ptree.parse_tree(line, args.p)
            if args.outline:
                stdout.write(ptree.render_tree(T) + "\n")
            else:
                stdout.write(f"{serialize(ptree.partition_of_tree(T))}\n")


def _render(args, stdin, stdout):
    text = args.object if args.object is not None else stdin.readline()
    if ";" in text:
        chain = parse_chain(text)
    else:
        chain = PartitionChain((parse(text),))
    diagram = bijections.chain_to_tied_diagram(chain)
    if args.format == "svg":
        if args.comb and (args.comb < 2 or diagram.base.n % args.comb):
            raise UsageError(f"--comb {args.comb} must be >= 2 and divide {diagram.base.n}")
        stdout.write(render_svg(diagram, comb=args.comb))
    else:
        stdout.write(render_text(diagram) + "\n")


def _verify(args, stdout) -> int:
    color = stdout.isatty() and "NO_COLOR" not in os.environ
    mark = {True: "\033[32mPASS\033[0m", False: "\033[31mFAIL\033[0m"} if color else {
        True: "PASS", False: "FAIL"}
    results = verify_all(args.max_points)
    for r in results:
        expected, actual = _short(r.expected), _short(r.actual)
        stdout.write(f"{mark[r.passed]}  [{r.criterion}] {r.name:<55} expected={expected} "
                     f"actual={actual} ({r.seconds:.3f}s)\n")
    failed = sum(not r.passed for r in results)
    stdout.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return EXIT_VERIFY if failed else EXIT_OK


def _short(value) -> str:
    if isinstance(value, (set, frozenset)):
        return f"<{len(value)} objects>"
    text = str(value)
    return text if len(text) <= 40 else text[:37] + "..."


def run(argv: list[str], stdin: TextIO = sys.stdin, stdout: TextIO = sys.stdout,
        stderr: TextIO = sys.stderr) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "count":
            stdout.write(f"{count(FAMILIES[args.family](*_family_args(args)))}\n")
        elif args.command == "enumerate":
            values = _family_args(args)
            for obj in FAMILIES[args.family](*values):
                if args.format == "json-lines":
                    stdout.write(json.dumps(_record(obj, args.family)) + "\n")
                else:
                    stdout.write(f"{obj}\n")
        elif args.command == "triangle":
            if args.p is None or args.n is None or args.p < 1 or args.n < 0:
                raise UsageError("triangle needs -p >= 1 and -n >= 0")
            for row in triangle(args.p, args.n).rows:
                stdout.write(" ".join(map(str, row)) + "\n")
        elif args.command == "biject":
            _biject(args, stdin, stdout)
        elif args.command == "tree":
            _tree(args, stdin, stdout)
        elif args.command == "render":
            _render(args, stdin, stdout)
        elif args.command == "verify":
            return _verify(args, stdout)
    except (UsageError, PartitionError, ValueError) as exc:
        stderr.write(f"fusscat: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))
