"""Command-line front end.

Subcommands: map, invert, decompose, verify, enumerate, render, bench.
Paths arrive as an argument or via stdin when the argument is "-", so
`dyckflip map UDUD | dyckflip invert -` round-trips.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from . import census as _census
from .bijection import phi, phi_inverse
from .decompose import decompose as _decompose
from .errors import DomainError, ParseError, RangeError, ValidationError
from .path import LatticePath, PathClass, classify, format_path, parse_path
from .render import RenderSpec, render_ascii, render_svg

_CLASS_FILTERS = {
    "balanced": PathClass.BALANCED,
    "up": PathClass.UP_UNBALANCED,
    "down": PathClass.DOWN_UNBALANCED,
    "other": PathClass.OTHER,
    "all": None,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckflip",
        description="Partial-reflection bijection between balanced lattice "
        "paths and unbalanced Dyck paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_path_cmd(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("path", help='path text, or "-" to read stdin')
        cmd.add_argument("--alphabet", choices=("ud", "ne"), default="ud")
        return cmd

    for name, help_text in (
        ("map", "map a balanced path to its unbalanced image"),
        ("invert", "recover the balanced path from an unbalanced image"),
    ):
        cmd = add_path_cmd(name, help_text)
        cmd.add_argument("--json", action="store_true", dest="as_json")
        cmd.add_argument("--trace", action="store_true")

    cmd = add_path_cmd("decompose", "show the peak decomposition of a balanced path")
    cmd.add_argument("--json", action="store_true", dest="as_json")

    verify = sub.add_parser("verify", help="exhaustive verification runs")
    vsub = verify.add_subparsers(dest="target", required=True)
    vb = vsub.add_parser("bijection", help="exhaustive bijectivity sweep")
    vb.add_argument("--n", type=int, required=True)
    vb.add_argument("--partitions", type=int, default=1)
    vb.add_argument("--json", action="store_true", dest="as_json")
    vi = vsub.add_parser("identity", help="central binomial convolution identity")
    vi.add_argument("--n", type=int, required=True)
    vi.add_argument("--mode", choices=("arithmetic", "structural"), default="arithmetic")
    vi.add_argument("--json", action="store_true", dest="as_json")

    enum = sub.add_parser("enumerate", help="list paths of a length in rank order")
    enum.add_argument("--len", type=int, required=True, dest="length")
    enum.add_argument("--class", choices=sorted(_CLASS_FILTERS), default="all", dest="cls")
    enum.add_argument("--alphabet", choices=("ud", "ne"), default="ud")

    rend = add_path_cmd("render", "draw a path as ASCII art or SVG")
    rend.add_argument("--svg", metavar="FILE", help='write SVG to FILE ("-" for stdout)')
    rend.add_argument("--cell-size", type=int, default=10)
    rend.add_argument("--trace", choices=("forward", "inverse"), default=None)
    rend.add_argument("--axes", action="store_true")

    bench = sub.add_parser("bench", help="time the exhaustive bijection sweep")
    bench.add_argument("--n", type=int, required=True)
    bench.add_argument("--partitions", type=int, default=1)

    return parser


def _read_path(arg: str, alphabet: str) -> LatticePath:
    text = sys.stdin.read() if arg == "-" else arg
    return parse_path(text, alphabet)


def _trace_fields(p, image, trace, alphabet: str) -> dict:
    return {
        "input": format_path(p, alphabet),
        "output": format_path(image, alphabet),
        "class_in": classify(p).value,
        "class_out": classify(image).value,
        "b_points": [list(pt) for pt in trace.b_points],
        "g_points": [list(pt) for pt in trace.g_points],
        "lines": list(trace.reflection_lines),
    }


def _run_map(args: argparse.Namespace, inverse: bool) -> int:
    p = _read_path(args.path, args.alphabet)
    image, trace = (phi_inverse if inverse else phi)(p)
    if args.as_json:
        print(json.dumps(_trace_fields(p, image, trace, args.alphabet)))
        return 0
    print(format_path(image, args.alphabet))
    if args.trace:
        print(f"class_in={classify(p).value}")
        print(f"class_out={classify(image).value}")
        print("b_points=" + ",".join(f"{i}:{h}" for i, h in trace.b_points))
        print("g_points=" + ",".join(f"{i}:{h}" for i, h in trace.g_points))
        print("lines=" + ",".join(map(str, trace.reflection_lines)))
    return 0


def _run_decompose(args: argparse.Namespace) -> int:
    p = _read_path(args.path, args.alphabet)
    d = _decompose(p)
    if args.as_json:
        print(
            json.dumps(
                {
                    "input": format_path(p, args.alphabet),
                    "parts": [
                        {
                            "uprun": up_len,
                            "kind": seg.kind.value,
                            "steps": format_path(seg.steps, args.alphabet),
                            "start": seg.start_index,
                        }
                        for up_len, seg in d.parts
                    ],
                    "peak_indices": list(d.peak_indices),
                    "peak_heights": list(d.peak_heights),
                }
            )
        )
        return 0
    for up_len, seg in d.parts:
        print(f"uprun={up_len}")
        print(f"segment={seg.kind.value}:{format_path(seg.steps, args.alphabet)}")
    peaks = ",".join(f"{i}:{h}" for i, h in zip(d.peak_indices, d.peak_heights))
    print(f"peaks={peaks}")
    return 0


def _print_report(report: _census.CensusReport, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report.to_json_dict()))
    else:
        sys.stdout.write(report.to_kv())
    return 0 if report.ok else 1


def _run_render(args: argparse.Namespace) -> int:
    p = _read_path(args.path, args.alphabet)
    trace = None
    if args.trace == "forward":
        _, trace = phi(p)
    elif args.trace == "inverse":
        _, trace = phi_inverse(p)
    spec = RenderSpec(path=p, trace=trace, cell_size=args.cell_size, show_axes=args.axes)
    if args.svg is not None:
        doc = render_svg(spec)
        if args.svg == "-":
            sys.stdout.write(doc)
        else:
            with open(args.svg, "w", encoding="utf-8") as fh:
                fh.write(doc)
    else:
        sys.stdout.write(render_ascii(spec))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "map":
            return _run_map(args, inverse=False)
        if args.command == "invert":
            return _run_map(args, inverse=True)
        if args.command == "decompose":
            return _run_decompose(args)
        if args.command == "verify":
            if args.target == "bijection":
                report = _census.verify_bijection(args.n, partitions=args.partitions)
            else:
                report = _census.verify_identity(args.n, mode=args.mode)
            return _print_report(report, args.as_json)
        if args.command == "enumerate":
            cls = _CLASS_FILTERS[args.cls]
            for p in _census.enumerate_class(args.length, cls):
                print(format_path(p, args.alphabet))
            return 0
        if args.command == "render":
            return _run_render(args)
        if args.command == "bench":
            start = time.perf_counter()
            report = _census.verify_bijection(args.n, partitions=args.partitions)
            elapsed = time.perf_counter() - start
            print(
                f"n={args.n} partitions={args.partitions} "
                f"paths={report.total_paths} ok={str(report.ok).lower()} "
                f"elapsed={elapsed:.3f}s"
            )
            return 0 if report.ok else 1
        raise AssertionError(f"unhandled command {args.command}")
    except (DomainError, ParseError, RangeError, ValidationError) as exc:
        kind = getattr(exc, "reason", type(exc).__name__.removesuffix("Error"))
        print(f"error: {kind}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
