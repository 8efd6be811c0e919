"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .exact import format_rational
from .fixtures import FixtureFormatError, assign_names, load_fixtures, match_fixtures
from .multiplet import InvariantViolation, MultipletGraph, dumps_json, generate, ks_pairing, to_dot
from .rootsys import epsilon_coords, roots_to_json, subsystem
from .verma import f4_root_system

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _subset(text: str) -> set[int]:
    try:
        idx = {int(x) for x in text.split(",") if x.strip()}
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices, got {text!r}")
    if not idx or not idx <= {1, 2, 3, 4}:
        raise argparse.ArgumentTypeError(f"indices must lie in 1..4, got {text!r}")
    return idx


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"labels must be >= 1, got {v}")
    return v


def _add_labels(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--symbolic", action="store_true", help="generic labels m1..m4 (default)")
    grp.add_argument("--labels", nargs=4, type=_positive, metavar=("M1", "M2", "M3", "M4"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="f4verma", description="F4 root data and the sl(3)+sl(2) parabolic multiplet"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    r = sub.add_parser("roots", help="list positive roots")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.add_argument("--subsystem", type=_subset, help="simple-root indices, e.g. 2,3,4")
    r.add_argument("-o", "--output")

    m = sub.add_parser("multiplet", help="generate the multiplet and print a summary")
    _add_labels(m)
    m.add_argument("--format", choices=("text", "json", "dot"), default="text")
    m.add_argument("-o", "--output")

    v = sub.add_parser("verify", help="run all consistency checks")
    _add_labels(v)
    v.add_argument("--fixtures", help="signature table (default: the bundled one)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("-o", "--output")

    e = sub.add_parser("export", help="write the multiplet graph to a file")
    _add_labels(e)
    e.add_argument("--format", choices=("json", "dot"), default="json")
    e.add_argument("-o", "--output", required=True)
    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_roots(args: argparse.Namespace) -> int:
    rs = f4_root_system()
    if args.subsystem:
        rs = subsystem(rs, args.subsystem)
    if args.format == "json":
        _emit(json.dumps(roots_to_json(rs), indent=2) + "\n", args.output)
        return EXIT_OK
    top = max(f4_root_system().norms.values())
    lines = [f"{'coords':<14}{'norm':<6}{'class':<7}epsilon"]
    for r in rs.positive:
        eps = ", ".join(format_rational(x) for x in epsilon_coords(r))
        cls = "long" if rs.norms[r] == top else "short"
        lines.append(f"{str(r):<14}{format_rational(rs.norms[r]):<6}{cls:<7}({eps})")
    n_long = sum(1 for r in rs.positive if rs.norms[r] == top)
    lines.append(f"{len(rs.positive)} ({n_long} long, {len(rs.positive) - n_long} short)")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _named_graph(args: argparse.Namespace) -> MultipletGraph:
    g = generate(args.labels)
    assign_names(g, match_fixtures(g, load_fixtures()))
    return g


def _summary(g: MultipletGraph) -> str:
    params = "symbolic" if g.params is None else " ".join(map(str, g.params))
    pairs = ks_pairing(g)
    return (
        f"labels: {params}\n"
        f"nodes: {len(g.nodes)}\n"
        f"edges: {len(g.edges)} ({len(g.diagram_edges)} diagram)\n"
        f"levels: {g.level_histogram()}\n"
        f"KS pairs: {len(pairs)}\n"
    )


def _node_table(g: MultipletGraph) -> str:
    lines = []
    for n in sorted(g.nodes, key=lambda n: (n.level, n.id)):
        name = n.name or "-"
        lines.append(f"{n.level:>3}  {name:<14} {n.signature}  d={n.signature.d}")
    return "\n".join(lines) + "\n"


def cmd_multiplet(args: argparse.Namespace) -> int:
    g = _named_graph(args)
    summary = _summary(g)
    if args.format == "text":
        _emit(summary + _node_table(g), args.output)
        return EXIT_OK
    body = dumps_json(g) if args.format == "json" else to_dot(g)
    _emit(body, args.output)
    (sys.stdout if args.output else sys.stderr).write(summary)
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    g = _named_graph(args)
    _emit(dumps_json(g) if args.format == "json" else to_dot(g), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    from .checks import run_checks, summary_line

    if args.fixtures and not Path(args.fixtures).is_file():
        print(f"fixture file not found: {args.fixtures}", file=sys.stderr)
        return EXIT_USAGE
    checks, _ = run_checks(args.labels, args.fixtures)
    failed = [c for c in checks if not c.passed]
    if args.format == "json":
        payload = {
            "passed": not failed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
            "failures": [c.name for c in failed],
        }
        _emit(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", args.output)
    else:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}" for c in checks]
        lines.append(summary_line(checks))
        _emit("\n".join(lines) + "\n", args.output)
        if failed:
            payload = {"failures": [{"check": c.name, "detail": c.detail} for c in failed]}
            sys.stderr.write(json.dumps(payload, ensure_ascii=False) + "\n")
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "roots": cmd_roots,
    "multiplet": cmd_multiplet,
    "verify": cmd_verify,
    "export": cmd_export,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except FixtureFormatError as exc:
        print(f"bad fixture file: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
