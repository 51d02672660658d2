"""Command-line front end.

Commands: verify (run the proof script), sweep (threshold sensitivity),
sig (build a graph from a point file), lattice (generate a triangular
lattice), experiment (seeded Monte-Carlo validation).

Exit codes: 0 verified/success, 1 verification refused or bound violated,
2 usage or structural error, 3 I/O error.  When an output location is
given, report commands also render figures next to the delimited output
(disable with --no-figures).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report as rp
from .bounds import Params
from .builtin_script import builtin_script
from .errors import DomainError, PointFileError, ResourceLimitError, SoigError, StructuralError
from .geometry import (
    PointSet,
    build_sig,
    graph_to_text,
    hex_lattice,
    lattice_report,
    out_weight_profile,
    run_experiment,
)
from .proofcheck import load_script, script_to_dict, sweep_p, verify_proof

EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _params(args) -> Params:
    return Params(args.p)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    if args.dump_script:
        _emit(rp.to_json(script_to_dict(builtin_script())), args.out)
        return EXIT_OK
    claims = load_script(args.script) if args.script else None
    result = verify_proof(_params(args), claims, paranoid=args.paranoid)
    if args.format == "json":
        _emit(rp.to_json(rp.report_to_dict(result)), args.out)
    else:
        _emit(rp.report_to_text(result), args.out)
    if result.overall == "verified":
        return EXIT_OK
    return EXIT_USAGE if result.overall == "error" else EXIT_REFUSED


def cmd_sweep(args) -> int:
    if args.p_from > args.p_to:
        raise DomainError(f"--from {args.p_from} exceeds --to {args.p_to}")
    claims = load_script(args.script) if args.script else None
    rows = sweep_p(args.p_from, args.p_to, args.step, claims, paranoid=args.paranoid)
    if args.format == "json":
        text = rp.to_json(rp.sweep_to_rows(rows))
    elif args.format == "csv":
        text = rp.sweep_to_csv(rows)
    else:
        text = rp.sweep_to_text(rows)
    _emit(text, args.out)
    if args.out and args.figures:
        rp.render_sweep_figure(rows, Path(args.out).with_suffix(".png"))
    return EXIT_OK


def _read_points(path: str | None) -> PointSet:
    if path and path != "-":
        return PointSet.from_file(path)
    return PointSet.from_text(sys.stdin.read())


def cmd_sig(args) -> int:
    ps = _read_points(args.input)
    params = _params(args)
    variant = "open" if args.open else "closed"
    graph = build_sig(ps, variant)
    if args.format == "json":
        profile = out_weight_profile(ps, params)
        degrees = graph.degrees()
        payload = {
            "variant": variant,
            "n": graph.n,
            "p": params.p,
            "radii": list(graph.radii),
            "degrees": degrees,
            "out_weights": list(profile.per_vertex),
            "edge_count": graph.edge_count,
            "edges_per_vertex": graph.edge_count / graph.n,
            "max_out_weight": profile.max_out_weight,
            "edge_bound_ok": graph.edge_count <= 14.5 * graph.n,
            "edges": [list(e) for e in sorted(graph.edges)],
        }
        _emit(rp.to_json(payload), args.out)
        ok = payload["edge_bound_ok"]
    else:
        text = graph_to_text(ps, graph, params)
        _emit(text, args.out)
        ok = graph.edge_count <= 14.5 * graph.n
    if args.out and args.figures:
        rp.render_degree_histogram(
            graph.degrees(), Path(args.out).with_suffix(".png"),
            title=f"{variant} graph degrees (n={graph.n})",
        )
    return EXIT_OK if ok else EXIT_REFUSED


def cmd_lattice(args) -> int:
    if args.report:
        stats = lattice_report(args.rows, args.cols, args.spacing, _params(args))
        _emit(rp.to_json(stats), args.out)
        if args.out and args.figures:
            ps = hex_lattice(args.rows, args.cols, args.spacing)
            graph = build_sig(ps, "closed")
            rp.render_degree_histogram(
                graph.degrees(), Path(args.out).with_suffix(".png"),
                title=f"lattice degrees ({args.rows}x{args.cols})",
            )
        return EXIT_OK if stats["edge_bound_ok"] else EXIT_REFUSED
    ps = hex_lattice(args.rows, args.cols, args.spacing)
    _emit(ps.to_text(), args.out)
    return EXIT_OK


def cmd_experiment(args) -> int:
    params = _params(args)
    summary = run_experiment(args.trials, args.n, args.seed, params)
    ok = (
        summary["out_weight_bound_ok"]
        and summary["edge_bound_ok"]
        and summary["smallest_ball_degree_ok"]
    )
    if args.format == "json":
        _emit(rp.to_json(summary), args.out)
    else:
        lines = [
            f"trials: {summary['trials']}  n: {summary['n']}  seed: {summary['seed']}  "
            f"p: {summary['p']:g}",
            f"max out-weight:            {summary['max_out_weight']:.4f}  "
            f"(bound 14.5: {'PASS' if summary['out_weight_bound_ok'] else 'FAIL'})",
            f"max edges per vertex:      {summary['max_edges_per_vertex']:.4f}  "
            f"(bound 14.5: {'PASS' if summary['edge_bound_ok'] else 'FAIL'})",
            f"max smallest-ball degree:  {summary['max_smallest_ball_degree']}  "
            f"(bound 29: {'PASS' if summary['smallest_ball_degree_ok'] else 'FAIL'})",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    if args.out and args.figures:
        rp.render_outweight_figure(
            [r["max_out_weight"] for r in summary["records"]],
            Path(args.out).with_suffix(".png"),
        )
    return EXIT_OK if ok else EXIT_REFUSED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="soig",
        description="sphere-of-influence graphs and the 14.5n edge-bound verifier",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_p=True):
        if with_p:
            p.add_argument("--p", type=float, default=1.409,
                           help="radius-ratio threshold (default 1.409)")
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--no-figures", dest="figures", action="store_false",
                       help="skip figure rendering next to file output")

    p_verify = sub.add_parser("verify", help="verify the proof script")
    add_common(p_verify)
    p_verify.add_argument("--script", help="custom proof-script JSON")
    p_verify.add_argument("--dump-script", action="store_true",
                          help="print the built-in script as JSON and exit")
    p_verify.add_argument("--paranoid", action="store_true",
                          help="shrink every pair bound by 1e-9 deg before summing")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="verify across a threshold range")
    p_sweep.add_argument("--from", dest="p_from", type=float, required=True)
    p_sweep.add_argument("--to", dest="p_to", type=float, required=True)
    p_sweep.add_argument("--step", type=float, required=True)
    p_sweep.add_argument("--script", help="custom proof-script JSON")
    p_sweep.add_argument("--paranoid", action="store_true")
    p_sweep.add_argument("--format", choices=("text", "csv", "json"), default="csv")
    add_common(p_sweep, with_p=False)
    p_sweep.set_defaults(func=cmd_sweep)

    p_sig = sub.add_parser("sig", help="build a sphere-of-influence graph")
    p_sig.add_argument("--input", default="-",
                       help="point file ('x y' per line, # comments); '-' for stdin")
    variant = p_sig.add_mutually_exclusive_group()
    variant.add_argument("--closed", action="store_true", help="closed variant (default)")
    variant.add_argument("--open", action="store_true", help="open variant")
    p_sig.add_argument("--format", choices=("text", "json"), default="text")
    add_common(p_sig)
    p_sig.set_defaults(func=cmd_sig)

    p_lat = sub.add_parser("lattice", help="generate a triangular lattice")
    p_lat.add_argument("--rows", type=int, required=True)
    p_lat.add_argument("--cols", type=int, required=True)
    p_lat.add_argument("--spacing", type=float, default=1.0)
    p_lat.add_argument("--report", action="store_true",
                       help="emit closed-graph statistics instead of points")
    add_common(p_lat)
    p_lat.set_defaults(func=cmd_lattice)

    p_exp = sub.add_parser("experiment", help="seeded Monte-Carlo validation")
    p_exp.add_argument("--trials", type=int, default=100)
    p_exp.add_argument("--n", type=int, default=50)
    p_exp.add_argument("--seed", type=int, default=0)
    p_exp.add_argument("--format", choices=("text", "json"), default="text")
    add_common(p_exp)
    p_exp.set_defaults(func=cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except PointFileError as exc:
        print(f"soig: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (StructuralError, DomainError, ResourceLimitError) as exc:
        print(f"soig: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"soig: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SoigError as exc:
        print(f"soig: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
