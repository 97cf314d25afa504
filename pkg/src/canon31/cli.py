"""Command-line front end.

Exit codes: 0 success or pass, 1 usage or I/O error, 2 verification failure,
3 precondition rejection (for example a separating triangle).
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .generator import GenSpec, generate, random_4ct
from .graph_core import has_separating_triangle, triangulation_defect
from .ordering import OrderingError, compute_31_ordering, verify_ordering
from .rect_dual import build_rect_dual, integer_layout, verify_rect_dual
from .ri_drawing import build_ri_drawing, verify_ri
from .serialize import (
    FormatError,
    drawing_from_json,
    drawing_to_json,
    dumps,
    graph_from_json,
    graph_to_json,
    layout_from_json,
    layout_to_json,
    ordering_from_json,
    ordering_to_json,
)
from .svg import drawing_svg, layout_svg

OK, USAGE, FAILED, REJECTED = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code = code
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(USAGE, "usage", message)


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except OSError as exc:
        raise CliError(USAGE, "io", f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(USAGE, "io", f"{path} is not valid JSON: {exc}") from exc


def _load(path: str, parse):
    try:
        return parse(_read_json(path))
    except FormatError as exc:
        raise CliError(USAGE, "format", f"{path}: {exc}") from exc


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(USAGE, "io", f"cannot write {path}: {exc}") from exc


def _ordering_for(g, args):
    if getattr(args, "ordering", None):
        o = _load(args.ordering, ordering_from_json)
        report = verify_ordering(g, o)
        if not report:
            raise CliError(REJECTED, "precondition", f"ordering is not valid: {report.failure}")
        return o
    try:
        return compute_31_ordering(g)
    except OrderingError as exc:
        raise CliError(REJECTED, "precondition", str(exc)) from exc


def _diagnose(path: str) -> tuple[int, dict]:
    try:
        g = _load(path, graph_from_json)
    except CliError as exc:
        return exc.code, {"file": path, "ok": False, "problem": str(exc)}
    info = {"file": path, "n": g.n, "m": g.m}
    defect = triangulation_defect(g)
    if defect is not None:
        return REJECTED, {**info, "ok": False, "problem": f"not a triangulation: {defect}"}
    if g.n < 6:
        return REJECTED, {**info, "ok": False, "problem": f"not 4-connected: n={g.n} < 6"}
    if has_separating_triangle(g):
        return REJECTED, {**info, "ok": False, "problem": "not 4-connected: separating triangle found"}
    return OK, {**info, "ok": True, "problem": None}


def cmd_validate(args) -> int:
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(_diagnose, args.graphs))
    for code, info in results:
        if args.json_errors:
            print(json.dumps(info))
        elif info["ok"]:
            print(f"{info['file']}: ok (n={info['n']}, m={info['m']}, 4-connected triangulation)")
        else:
            print(f"{info['file']}: {info['problem']}")
    return max(code for code, _ in results)


def cmd_order(args) -> int:
    g = _load(args.graph, graph_from_json)
    _write(args.output, dumps(ordering_to_json(_ordering_for(g, args))))
    return OK


def cmd_rd(args) -> int:
    g = _load(args.graph, graph_from_json)
    layout = build_rect_dual(g, _ordering_for(g, args))
    if args.integer:
        layout = integer_layout(layout)
    _write(args.output, dumps(layout_to_json(layout)))
    if args.svg:
        _write(args.svg, layout_svg(layout))
    return OK


def cmd_ri(args) -> int:
    g = _load(args.graph, graph_from_json)
    drawing = build_ri_drawing(g, _ordering_for(g, args))
    _write(args.output, dumps(drawing_to_json(drawing)))
    if args.svg:
        _write(args.svg, drawing_svg(g, tuple(g.outer_face[:2]), drawing, overlays=args.overlays))
    return OK


def _report(report) -> int:
    print(json.dumps(report.to_json()))
    return OK if report else FAILED


def cmd_check_order(args) -> int:
    g = _load(args.graph, graph_from_json)
    o = _load(args.ordering_file, ordering_from_json)
    return _report(verify_ordering(g, o, bruteforce_limit=args.bruteforce_limit))


def cmd_check_rd(args) -> int:
    g = _load(args.graph, graph_from_json)
    layout = _load(args.layout, layout_from_json)
    return _report(verify_rect_dual(g, tuple(g.outer_face[:2]), layout))


def cmd_check_ri(args) -> int:
    g = _load(args.graph, graph_from_json)
    drawing = _load(args.drawing, drawing_from_json)
    return _report(verify_ri(g, tuple(g.outer_face[:2]), drawing))


def cmd_gen(args) -> int:
    if args.family == "double-wheel":
        try:
            graphs = [(f"dw{args.cycle_len}", generate(GenSpec("double_wheel", cycle_len=args.cycle_len)))]
        except ValueError as exc:
            raise CliError(USAGE, "usage", str(exc)) from exc
    else:
        n_max = args.n_max if args.n_max is not None else args.n
        if args.n < 6 or n_max < args.n:
            raise CliError(USAGE, "usage", "need 6 <= n <= n-max")
        sizes = list(range(args.n, n_max + 1))
        graphs = []
        for k in range(args.count):
            n = sizes[k % len(sizes)]
            graphs.append((f"r{n:04d}_s{args.seed + k}", random_4ct(n, args.seed + k)))
    if args.output is None:
        if len(graphs) != 1:
            raise CliError(USAGE, "usage", "writing several graphs needs -o DIR")
        _write(None, dumps(graph_to_json(graphs[0][1])))
        return OK
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    for name, g in graphs:
        _write(str(out / f"{name}.json"), dumps(graph_to_json(g)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="canon31", description="(3,1)-canonical orderings, rectangular duals and RI-drawings")
    p.add_argument("--json-errors", action="store_true", help="print diagnostics as JSON")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("validate", help="check that graphs are 4-connected triangulations")
    s.add_argument("graphs", nargs="+")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("order", help="compute a (3,1)-canonical ordering")
    s.add_argument("graph")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_order)

    for name, func, help_ in (("rd", cmd_rd, "rectangular dual of G - (u1, u2)"),
                              ("ri", cmd_ri, "rectangle-of-influence drawing of G - (u1, u2)")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("graph")
        s.add_argument("--ordering", help="ordering JSON (computed if omitted; '-' reads stdin)")
        s.add_argument("-o", "--output")
        s.add_argument("--svg", metavar="PATH")
        if name == "rd":
            s.add_argument("--integer", action="store_true", help="rescale to integer coordinates")
        else:
            s.add_argument("--overlays", action="store_true", help="shade every rectangle of influence")
        s.set_defaults(func=func)

    s = sub.add_parser("check-order", help="verify an ordering")
    s.add_argument("graph")
    s.add_argument("ordering_file", metavar="ordering")
    s.add_argument("--bruteforce-limit", type=int, default=200)
    s.set_defaults(func=cmd_check_order)

    s = sub.add_parser("check-rd", help="verify a rectangular dual")
    s.add_argument("graph")
    s.add_argument("layout")
    s.set_defaults(func=cmd_check_rd)

    s = sub.add_parser("check-ri", help="verify an RI-drawing")
    s.add_argument("graph")
    s.add_argument("drawing")
    s.set_defaults(func=cmd_check_ri)

    s = sub.add_parser("gen", help="generate 4-connected triangulations")
    s.add_argument("--family", choices=["double-wheel", "random"], default="random")
    s.add_argument("--cycle-len", type=int, default=4)
    s.add_argument("--n", type=int, default=12)
    s.add_argument("--n-max", type=int)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output", help="directory for the generated files")
    s.set_defaults(func=cmd_gen)
    return p


def run(argv: list[str] | None = None) -> int:
    json_errors = "--json-errors" in (argv if argv is not None else sys.argv[1:])
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise CliError(USAGE, "usage", "a subcommand is required")
        return args.func(args)
    except CliError as exc:
        if json_errors:
            print(json.dumps({"error": exc.kind, "code": exc.code, "message": str(exc)}), file=sys.stderr)
        else:
            print(f"canon31: {exc}", file=sys.stderr)
        return exc.code


def main() -> None:
    sys.exit(run())
