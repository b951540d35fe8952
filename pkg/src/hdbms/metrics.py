"""Traversal-quality metrics, timing harness and comparison reports."""
from __future__ import annotations

import csv
import io
import json
import math
import statistics
import time
from collections.abc import Sequence
from dataclasses import asdict, dataclass, field

from .engine import HdbmsConfig, hdbms_traverse
from .generators import GenSpec, GraphKind, generate
from .graph import Direction, WeightedGraph
from .search import TraversalResult, bfs, dfs, reachable_set

TRAVERSALS = ("bfs", "dfs", "hdbms")

CSV_COLUMNS = (
    "algorithm",
    "config_summary",
    "completeness",
    "order_quality_macd",
    "optimality_dcg",
    "elapsed_seconds",
    "order",
)


@dataclass(frozen=True)
class EngineSpec:
    """A traversal engine plus its settings.

    ``direction`` applies to BFS/DFS; HDBMS reads its direction from ``hdbms``.
    """

    algorithm: str
    direction: Direction = Direction.DIRECTED
    hdbms: HdbmsConfig = field(default_factory=HdbmsConfig)

    def __post_init__(self):
        if self.algorithm not in TRAVERSALS:
            raise ValueError(f"unknown traversal {self.algorithm!r}; expected one of {TRAVERSALS}")
        object.__setattr__(self, "direction", Direction(self.direction))

    @property
    def effective_direction(self) -> Direction:
        return self.hdbms.direction if self.algorithm == "hdbms" else self.direction

    def summary(self) -> str:
        if self.algorithm == "hdbms":
            return self.hdbms.summary()
        return f"direction={self.direction.value}"

    def run(self, graph: WeightedGraph, root: int) -> TraversalResult:
        if self.algorithm == "bfs":
            return bfs(graph, root, self.direction)
        if self.algorithm == "dfs":
            return dfs(graph, root, self.direction)
        return hdbms_traverse(graph, root, self.hdbms)


@dataclass
class MetricsReport:
    algorithm: str
    config_summary: str
    completeness: float
    order_quality_macd: float
    optimality_dcg: float
    elapsed_seconds: float
    order: list[int]

    def as_row(self, timing: bool = True) -> dict[str, str]:
        return {
            "algorithm": self.algorithm,
            "config_summary": self.config_summary,
            "completeness": f"{self.completeness:.6f}",
            "order_quality_macd": f"{self.order_quality_macd:.6f}",
            "optimality_dcg": f"{self.optimality_dcg:.6f}",
            "elapsed_seconds": f"{self.elapsed_seconds:.6f}" if timing else "",
            "order": ", ".join(map(str, self.order)),
        }


@dataclass
class BenchResult:
    repetitions: int
    warmup: int
    mean_seconds: float
    stddev_seconds: float
    min_seconds: float
    deterministic: bool
    order: list[int]


def completeness(
    result: TraversalResult,
    graph: WeightedGraph,
    root: int,
    direction: Direction | str = Direction.DIRECTED,
) -> float:
    reachable = reachable_set(graph, root, direction)
    return len(set(result.ids) & reachable) / len(reachable)


def order_quality_macd(result: TraversalResult) -> float:
    """Mean |w(i+1) - w(i)| over consecutive visits; 0 for a single node."""
    ws = result.weights
    if len(ws) < 2:
        return 0.0
    return math.fsum(abs(b - a) for a, b in zip(ws, ws[1:])) / (len(ws) - 1)


def optimality_dcg(result: TraversalResult) -> float:
    """Sum of w(v_i) / log2(i + 1) over 1-based positions i."""
    return math.fsum(w / math.log2(i + 1) for i, w in enumerate(result.weights, start=1))


def measure(graph: WeightedGraph, root: int, engine: EngineSpec) -> MetricsReport:
    result = engine.run(graph, root)
    return MetricsReport(
        algorithm=engine.algorithm,
        config_summary=engine.summary(),
        completeness=completeness(result, graph, root, engine.effective_direction),
        order_quality_macd=order_quality_macd(result),
        optimality_dcg=optimality_dcg(result),
        elapsed_seconds=result.elapsed,
        order=result.ids,
    )


def compare_report(graph: WeightedGraph, root: int, engines: Sequence[EngineSpec]) -> list[MetricsReport]:
    if not engines:
        raise ValueError("compare_report needs at least one engine")
    return [measure(graph, root, e) for e in engines]


def bench(
    graph: WeightedGraph,
    root: int,
    engine: EngineSpec,
    repetitions: int = 100,
    warmup: int = 5,
) -> BenchResult:
    """Time ``repetitions`` runs after ``warmup`` discarded ones."""
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    if warmup < 0:
        raise ValueError("warmup must be >= 0")
    for _ in range(warmup):
        engine.run(graph, root)
    times = []
    first = None
    deterministic = True
    for _ in range(repetitions):
        t0 = time.perf_counter()
        result = engine.run(graph, root)
        times.append(time.perf_counter() - t0)
        if first is None:
            first = result.ids
        elif result.ids != first:
            deterministic = False
    return BenchResult(
        repetitions=repetitions,
        warmup=warmup,
        mean_seconds=statistics.fmean(times),
        stddev_seconds=statistics.pstdev(times),
        min_seconds=min(times),
        deterministic=deterministic,
        order=first,
    )


def reports_to_csv(reports: Sequence[MetricsReport], timing: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.as_row(timing))
    return buf.getvalue()


def reports_to_json(reports: Sequence[MetricsReport], timing: bool = True) -> str:
    rows = []
    for r in reports:
        row = asdict(r)
        row["elapsed_seconds"] = round(r.elapsed_seconds, 6) if timing else None
        rows.append(row)
    return json.dumps(rows, indent=2) + "\n"


@dataclass
class ScalingRow:
    n: int
    edges: int
    algorithm: str
    visited: int
    mean_seconds: float

    def __str__(self) -> str:
        return (
            f"n={self.n:<7d} edges={self.edges:<8d} {self.algorithm:<6s} "
            f"visited={self.visited:<7d} mean={self.mean_seconds:.6f}s "
            f"per_node={self.mean_seconds / self.visited * 1e6:.3f}us"
        )


def scaling_report(
    sizes: Sequence[int] = (1_000, 10_000, 100_000),
    engines: Sequence[EngineSpec] | None = None,
    mean_out_degree: float = 4.0,
    seed: int = 0,
    repetitions: int = 1,
) -> list[ScalingRow]:
    """Time each engine from node 1 on sparse Erdos-Renyi graphs of growing size.

    Report only: nothing here asserts a complexity class.
    """
    engines = engines or [EngineSpec(a) for a in TRAVERSALS]
    rows = []
    for n in sizes:
        p = min(1.0, mean_out_degree / (n - 1)) if n > 1 else 0.0
        graph = generate(GenSpec(GraphKind.ERDOS_RENYI, n=n, p=p, seed=seed))
        for engine in engines:
            b = bench(graph, 1, engine, repetitions=repetitions, warmup=0)
            rows.append(ScalingRow(n, graph.edge_count, engine.algorithm, len(b.order), b.mean_seconds))
    return rows
