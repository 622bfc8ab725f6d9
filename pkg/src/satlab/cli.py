"""Command-line front end: ``satlab construct|check|search|verify-theorem|props|convert``.

Exit codes: 0 success, 1 check/verification failure, 2 usage error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import platform
import sys
import time
from pathlib import Path

from . import __version__
from .constructions import InfeasibleError, build_extremal
from .enumeration import SearchConfig, SearchError, min_sat_edges, verify_theorem
from .graph import Graph6Error, GraphError, from_graph6, make_graph, to_graph6
from .patterns import Pattern, PatternError, is_saturated
from .structure import run_checks

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCOMPLETE = 3

CHECK_NAMES = ("p1", "c2", "c3")


class UsageError(Exception):
    pass


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_manifest(path: Path, command: str, params: dict, seconds: float,
                   inputs: list[Path] = (), outputs: list[Path] = (), extra: dict | None = None) -> None:
    manifest = {
        "command": command,
        "parameters": params,
        "version": __version__,
        "python": platform.python_version(),
        "host": platform.node(),
        "seconds": round(seconds, 3),
        "inputs": {str(p): _sha256(p) for p in inputs},
        "outputs": {str(p): _sha256(p) for p in outputs},
    }
    if extra:
        manifest.update(extra)
    path.write_text(json.dumps(manifest, indent=2) + "\n")


def _manifest_path(args, default: Path | None) -> Path | None:
    if args.manifest:
        return Path(args.manifest)
    if default is not None:
        return default.with_name(default.name + ".manifest.json")
    return None


def _params(args) -> dict:
    skip = {"func", "config", "manifest"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _read_lines(path: str) -> list[bytes]:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        data = Path(path).read_bytes()
    return data.splitlines()


def _parse_line(raw: bytes):
    text = raw.strip()
    if text.startswith(b"{"):
        try:
            obj = json.loads(text)
            return make_graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])
        except (ValueError, KeyError, TypeError) as exc:
            raise Graph6Error(f"bad edge-json record: {exc}") from exc
    return from_graph6(text)


def _iter_graphs(path: str):
    """Yield ``(line_number, graph or None, error or None)`` for non-blank lines."""
    for i, raw in enumerate(_read_lines(path), start=1):
        if not raw.strip():
            continue
        try:
            yield i, _parse_line(raw), None
        except (Graph6Error, GraphError) as exc:
            yield i, None, str(exc)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


# commands -------------------------------------------------------------------


def cmd_construct(args) -> int:
    t0 = time.perf_counter()
    try:
        g, recipe = build_extremal(args.n, args.family)
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    line = to_graph6(g) + b"\n"
    if args.out:
        out = Path(args.out)
        out.write_bytes(line)
        _emit(recipe.to_json())
        mpath = _manifest_path(args, out)
        write_manifest(mpath, "construct", _params(args), time.perf_counter() - t0, outputs=[out])
    else:
        sys.stdout.buffer.write(line)
        sys.stdout.flush()
        print(json.dumps(recipe.to_json()), file=sys.stderr)
    return EXIT_OK


def cmd_check(args) -> int:
    pattern = Pattern.parse(args.pattern)
    failed = False
    for lineno, g, err in _iter_graphs(args.input):
        if err is not None:
            print(f"line {lineno}: {err}", file=sys.stderr)
            failed = True
            continue
        v = is_saturated(g, pattern)
        _emit({"line": lineno, "n": g.n, "edges": g.num_edges(), "free": v.is_free, "saturated": v.is_saturated})
        if not v.is_saturated:
            failed = True
    return EXIT_FAIL if args.require_saturated and failed else EXIT_OK


def cmd_search(args) -> int:
    pattern = Pattern.parse(args.pattern)
    config = SearchConfig(args.n, pattern, mode=args.mode, worker_count=args.jobs, node_budget=args.node_budget)
    report = min_sat_edges(config)
    text = json.dumps(report.to_json(include_timing=False)) + "\n"
    sys.stdout.write(text)
    if args.report:
        out = Path(args.report)
        out.write_text(text)
        write_manifest(_manifest_path(args, out), "search", _params(args), report.wall_time,
                       outputs=[out], extra={"nodes": report.nodes})
    if not report.complete:
        print("search incomplete: node budget exhausted", file=sys.stderr)
        return EXIT_INCOMPLETE
    return EXIT_OK


def cmd_verify_theorem(args) -> int:
    if args.max_n < 5:
        raise UsageError(f"--max-n must be at least 5 (the formula is stated for n >= 5), got {args.max_n}")
    t0 = time.perf_counter()
    rows = verify_theorem(args.max_n, jobs=args.jobs, node_budget=args.node_budget)
    print(f"{'n':>3} {'sat(n,K23)':>10} {'2n-3':>5}  match")
    for r in rows:
        oracle = "?" if r.oracle is None else str(r.oracle)
        flag = "yes" if r.match else ("INCOMPLETE" if not r.complete else "MISMATCH")
        print(f"{r.n:>3} {oracle:>10} {r.expected:>5}  {flag}")
    table = {"pattern": "k2,3", "rows": [r.to_json() for r in rows]}
    print(json.dumps(table))
    if args.json:
        out = Path(args.json)
        out.write_text(json.dumps(table) + "\n")
        write_manifest(_manifest_path(args, out), "verify-theorem", _params(args), time.perf_counter() - t0,
                       outputs=[out])
    if any(not r.complete for r in rows):
        return EXIT_INCOMPLETE
    if not all(r.match for r in rows):
        print("MISMATCH: exhaustive value differs from 2n-3", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_props(args) -> int:
    checks = [c.strip().lower() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECK_NAMES]
    if unknown or not checks:
        raise UsageError(f"unknown check(s) {unknown}; choose from {', '.join(CHECK_NAMES)}")
    failed = False
    for lineno, g, err in _iter_graphs(args.input):
        if err is not None:
            print(f"line {lineno}: {err}", file=sys.stderr)
            failed = True
            continue
        if args.alpha is not None and not 0 <= args.alpha < g.n:
            raise UsageError(f"--alpha {args.alpha} out of range for the graph on line {lineno}")
        for res in run_checks(g, checks, args.alpha):
            obj = {"line": lineno}
            obj.update(res.to_json())
            _emit(obj)
            failed = failed or not res.passed
    return EXIT_FAIL if failed else EXIT_OK


def cmd_convert(args) -> int:
    out_lines = []
    for lineno, g, err in _iter_graphs(args.input):
        if err is not None:
            print(f"line {lineno}: {err}", file=sys.stderr)
            return EXIT_FAIL
        if args.to == "graph6":
            out_lines.append(to_graph6(g))
        else:
            out_lines.append(json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}).encode())
    data = b"".join(line + b"\n" for line in out_lines)
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="satlab", description="Saturated graph constructions, checks and exact search.")
    parser.add_argument("--version", action="version", version=f"satlab {__version__}")
    parser.add_argument("--config", help="JSON file with default values for flags (flags win)")
    parser.add_argument("--manifest", help="where to write the run manifest (default: next to the output file)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a minimum K_2,3-saturated graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=["a", "b", "c", "A", "B", "C"])
    p.add_argument("--out", help="graph6 output file (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="test graphs for pattern-freeness and saturation")
    p.add_argument("input", help="graph6 or edge-json lines ('-' for stdin)")
    p.add_argument("--pattern", default="k2,3")
    p.add_argument("--require-saturated", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="exact sat(n, P) by exhaustive enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", default="k2,3")
    p.add_argument("--mode", choices=["minimum-only", "all-saturated"], default="minimum-only")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--node-budget", type=int)
    p.add_argument("--report", help="write the report JSON here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-theorem", help="compare exhaustive sat(n, K_2,3) with 2n-3")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--node-budget", type=int)
    p.add_argument("--json", help="write the table JSON here")
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("props", help="run the structural checkers p1, c2, c3")
    p.add_argument("input")
    p.add_argument("--checks", default="p1,c2,c3")
    p.add_argument("--alpha", type=int, help="vertex for c2/c3 (default: every vertex)")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("convert", help="convert between graph6 and edge-json lines")
    p.add_argument("input")
    p.add_argument("--to", choices=["graph6", "edge-json"], required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return parser.parse_args(argv)
    try:
        config = json.loads(Path(known.config).read_text())
    except (OSError, ValueError) as exc:
        parser.error(f"cannot read config {known.config}: {exc}")
    if not isinstance(config, dict):
        parser.error("config file must hold a JSON object")
    config = {k.replace("-", "_"): v for k, v in config.items()}
    for action in parser._subparsers._group_actions:
        for subparser in action.choices.values():
            known = {a.dest for a in subparser._actions}
            subparser.set_defaults(**{k: v for k, v in config.items() if k in known})
            # required flags may now come from the config
            for a in subparser._actions:
                if a.dest in config and a.required:
                    a.required = False
    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    args = _apply_config(parser, argv)
    try:
        return args.func(args)
    except (UsageError, PatternError, SearchError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
