"""Command-line entry point.

Exit status: 0 success, 1 usage error, 2 data error, 3 no path.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import TextIO

from . import datasets
from .engine import HdbmsConfig, SelectionPolicy, TauSchedule, hdbms_traverse
from .errors import GraphError, InvalidSpec, NoPath
from .generators import GenSpec, GraphKind, WeightDist, generate
from .graph import Direction, WeightedGraph, format_weight, parse_edge_list, serialize_edge_list, to_dot
from .metrics import (
    TRAVERSALS,
    EngineSpec,
    bench,
    compare_report,
    reports_to_csv,
    reports_to_json,
    scaling_report,
)
from .search import CostModel, Heuristic, TraversalResult, astar, bfs, bidirectional_search, dfs

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NOPATH = 0, 1, 2, 3

BUILTIN = {"social": datasets.social_graph, "graph2": datasets.graph2}


class UsageError(Exception):
    def __init__(self, message: str, usage: str):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(message, self.format_usage())


def format_traversal(result: TraversalResult, style: str = "plain") -> str:
    """``1, 2, 5`` (plain) or ``1 (0.3), 2 (0.4)`` (weighted)."""
    if style == "plain":
        return ", ".join(str(n) for n in result.ids)
    if style == "weighted":
        return ", ".join(f"{n} ({format_weight(w)})" for n, w in result.order)
    raise ValueError(f"unknown style {style!r}")


# -- argument grammar ------------------------------------------------------


def _nonneg_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid float value: {text!r}") from None
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _source_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_argument_group("graph source (one of)")
    src = g.add_mutually_exclusive_group(required=required)
    src.add_argument("--input", metavar="PATH", help="edge-list file ('-' for stdin)")
    src.add_argument("--builtin", choices=sorted(BUILTIN), help="bundled example graph")
    src.add_argument("--gen", choices=[k.value for k in GraphKind], help="generate a graph instead")
    _gen_args(g)


def _gen_args(g) -> None:
    g.add_argument("--n", type=int, default=10, help="node count (erdos_renyi, barabasi_albert, chain)")
    g.add_argument("--p", type=float, default=0.1, help="edge probability (erdos_renyi)")
    g.add_argument("--m", type=int, default=1, help="attachments per node (barabasi_albert)")
    g.add_argument("--levels", type=int, default=3, help="levels (layered)")
    g.add_argument("--width", type=int, default=3, help="nodes per level (layered)")
    g.add_argument("--weights", default="uniform01", help="uniform01 or fixed:<c>")
    g.add_argument("--seed", type=int, default=0)


def _hdbms_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("hdbms")
    g.add_argument("--policy", choices=[x.value for x in SelectionPolicy], default="similarity")
    g.add_argument("--tau", type=_nonneg_float, default=None, help="similarity threshold (default: off)")
    g.add_argument("--tau-schedule", choices=[x.value for x in TauSchedule], default="fixed")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--direction", choices=[d.value for d in Direction], default="directed")
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hdbms", description="Weight-guided graph traversal toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("traverse", help="run one traversal or path search")
    _source_args(p)
    _common(p)
    p.add_argument("--root", type=int, required=True, help="root node (start node for path searches)")
    p.add_argument("--algo", choices=[*TRAVERSALS, "bidir", "astar"], required=True)
    _hdbms_args(p)
    g = p.add_argument_group("path searches")
    g.add_argument("--goal", type=int)
    g.add_argument("--cost", choices=[c.value for c in CostModel], default="unit")
    g.add_argument("--heuristic", metavar="PATH", help="file of '<node> <estimate>' lines")
    p.add_argument("--style", choices=["plain", "weighted"], default="plain")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--timing", action="store_true", help="also print elapsed seconds")

    p = sub.add_parser("compare", help="metrics table for several traversals")
    _source_args(p)
    _common(p)
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--algos", default="bfs,dfs,hdbms", help="comma-separated subset of bfs,dfs,hdbms")
    _hdbms_args(p)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--no-timing", dest="timing", action="store_false", help="leave elapsed_seconds blank")

    p = sub.add_parser("bench", help="repeat a traversal and report timing")
    _source_args(p, required=False)
    _common(p)
    p.add_argument("--root", type=int, default=1)
    p.add_argument("--algo", choices=TRAVERSALS, default="bfs")
    _hdbms_args(p)
    p.add_argument("--repetitions", type=int, default=100)
    p.add_argument("--warmup", type=int, default=5)
    p.add_argument("--scaling", metavar="SIZES", help="comma-separated n values for an Erdos-Renyi sweep")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--no-timing", dest="timing", action="store_false", help="omit wall-clock figures")

    p = sub.add_parser("gen", help="generate a synthetic graph")
    p.add_argument("kind", choices=[k.value for k in GraphKind])
    _gen_args(p)
    p.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("export", help="re-emit a graph as an edge list or DOT")
    _source_args(p)
    p.add_argument("--format", choices=["edgelist", "dot"], default="dot")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("validate", help="parse a graph and report its size")
    _source_args(p)
    p.add_argument("--out", metavar="PATH")
    return parser


# -- commands --------------------------------------------------------------


def _gen_spec(args, kind: str) -> GenSpec:
    return GenSpec(
        kind=kind,
        n=args.n,
        p=args.p,
        m=args.m,
        levels=args.levels,
        width=args.width,
        seed=args.seed,
        weights=WeightDist.parse(args.weights),
    )


def _load(args) -> WeightedGraph:
    if args.builtin:
        return BUILTIN[args.builtin]()
    if args.gen:
        return generate(_gen_spec(args, args.gen))
    if args.input == "-":
        return parse_edge_list(sys.stdin.read())
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphError(f"cannot read {args.input}: {exc.strerror}") from None
    try:
        return parse_edge_list(text)
    except GraphError as exc:
        exc.source = args.input
        raise


def _hdbms_config(args) -> HdbmsConfig:
    return HdbmsConfig(
        policy=args.policy,
        direction=args.direction,
        tau=args.tau,
        tau_schedule=args.tau_schedule,
    )


def _cmd_traverse(args) -> str:
    graph = _load(args)
    if args.algo in ("bidir", "astar"):
        if args.goal is None:
            raise UsageError(f"--goal is required with --algo {args.algo}", "")
        if args.algo == "bidir":
            res = bidirectional_search(graph, args.root, args.goal)
        else:
            h = Heuristic()
            if args.heuristic:
                try:
                    h = Heuristic.parse(Path(args.heuristic).read_text(encoding="utf-8"))
                except (OSError, ValueError) as exc:
                    raise GraphError(f"{args.heuristic}: {exc}") from None
            res = astar(graph, args.root, args.goal, args.cost, h)
        if args.format == "json":
            return json.dumps({"path": res.path, "cost": res.cost, "expanded_count": res.expanded_count}) + "\n"
        if args.format == "csv":
            return "position,id\n" + "".join(f"{i},{n}\n" for i, n in enumerate(res.path))
        return f"path: {' -> '.join(map(str, res.path))}\ncost: {res.cost:g}\nexpanded: {res.expanded_count}\n"

    if args.algo == "bfs":
        result = bfs(graph, args.root, args.direction)
    elif args.algo == "dfs":
        result = dfs(graph, args.root, args.direction)
    else:
        result = hdbms_traverse(graph, args.root, _hdbms_config(args))

    if args.format == "json":
        doc = {
            "algorithm": args.algo,
            "order": [
                {"id": n, "weight": w, "step": k.value}
                for (n, w), k in zip(result.order, result.step_kinds)
            ],
        }
        if args.timing:
            doc["elapsed_seconds"] = round(result.elapsed, 6)
        return json.dumps(doc) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["position", "id", "weight", "step_kind"])
        for i, ((n, wt), k) in enumerate(zip(result.order, result.step_kinds)):
            w.writerow([i, n, format_weight(wt), k.value])
        return buf.getvalue()
    text = format_traversal(result, args.style) + "\n"
    if args.timing:
        text += f"time: {result.elapsed:.6f} s\n"
    return text


def _engines(args, names: list[str]) -> list[EngineSpec]:
    cfg = _hdbms_config(args)
    out = []
    for name in names:
        if name not in TRAVERSALS:
            raise UsageError(f"argument --algos: unknown algorithm {name!r}", "")
        out.append(EngineSpec(name, args.direction, cfg))
    return out


def _cmd_compare(args) -> str:
    graph = _load(args)
    reports = compare_report(graph, args.root, _engines(args, [a.strip() for a in args.algos.split(",") if a.strip()]))
    if args.format == "csv":
        return reports_to_csv(reports, args.timing)
    if args.format == "json":
        return reports_to_json(reports, args.timing)
    lines = []
    for r in reports:
        row = r.as_row(args.timing)
        lines.append(f"{r.algorithm} [{r.config_summary}]")
        lines.append(f"  order: {row['order']}")
        lines.append(
            f"  completeness={row['completeness']} macd={row['order_quality_macd']} dcg={row['optimality_dcg']}"
            + (f" time={row['elapsed_seconds']}s" if args.timing else "")
        )
    return "\n".join(lines) + "\n"


def _cmd_bench(args) -> str:
    if args.scaling:
        try:
            sizes = [int(s) for s in args.scaling.split(",")]
        except ValueError:
            raise UsageError(f"argument --scaling: expected integers, got {args.scaling!r}", "") from None
        rows = scaling_report(sizes, [EngineSpec(args.algo, args.direction, _hdbms_config(args))], seed=args.seed)
        if not args.timing:
            return "".join(f"n={r.n} edges={r.edges} {r.algorithm} visited={r.visited}\n" for r in rows)
        return "".join(f"{r}\n" for r in rows)

    if not (args.input or args.builtin or args.gen):
        raise UsageError("one of the arguments --input --builtin --gen is required", "")
    if args.repetitions < 1:
        raise UsageError("argument --repetitions: must be >= 1", "")
    if args.warmup < 0:
        raise UsageError("argument --warmup: must be >= 0", "")
    graph = _load(args)
    engine = EngineSpec(args.algo, args.direction, _hdbms_config(args))
    b = bench(graph, args.root, engine, args.repetitions, args.warmup)
    doc = {
        "algorithm": args.algo,
        "config_summary": engine.summary(),
        "repetitions": b.repetitions,
        "warmup": b.warmup,
        "deterministic": b.deterministic,
        "visited": len(b.order),
    }
    if args.timing:
        doc.update(
            mean_seconds=round(b.mean_seconds, 6),
            stddev_seconds=round(b.stddev_seconds, 6),
            min_seconds=round(b.min_seconds, 6),
        )
    if args.format == "json":
        return json.dumps(doc) + "\n"
    lines = [f"{k}: {'yes' if v is True else 'no' if v is False else f'{v:.6f}' if isinstance(v, float) else v}"
             for k, v in doc.items()]
    return "\n".join(lines) + "\n"


def _cmd_gen(args) -> tuple[str, str | None]:
    graph = generate(_gen_spec(args, args.kind))
    body = to_dot(graph) if args.format == "dot" else serialize_edge_list(graph)
    return body, f"{graph.node_count} nodes, {graph.edge_count} edges\n"


def _cmd_export(args) -> str:
    graph = _load(args)
    return to_dot(graph) if args.format == "dot" else serialize_edge_list(graph)


def _cmd_validate(args) -> str:
    graph = _load(args)
    text = f"{graph.node_count} nodes, {graph.edge_count} edges"
    if graph.duplicate_edges:
        text += f" ({graph.duplicate_edges} duplicate edges dropped)"
    return text + "\n"


COMMANDS = {
    "traverse": _cmd_traverse,
    "compare": _cmd_compare,
    "bench": _cmd_bench,
    "export": _cmd_export,
    "validate": _cmd_validate,
}


def run(argv: list[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "gen":
            body, summary = _cmd_gen(args)
            if args.out:
                Path(args.out).write_text(body, encoding="utf-8")
                stdout.write(summary)
            else:
                stdout.write(body)
            return EXIT_OK
        text = COMMANDS[args.command](args)
    except UsageError as exc:
        stderr.write(f"hdbms: usage error: {exc}\n{exc.usage or parser.format_usage()}")
        return EXIT_USAGE
    except NoPath as exc:
        stderr.write(f"hdbms: {exc}\n")
        return EXIT_NOPATH
    except (GraphError, InvalidSpec) as exc:
        stderr.write(f"hdbms: data error: {exc}\n")
        return EXIT_DATA
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
