"""Baseline traversals (BFS, DFS) and path searches (bi-directional, A*)."""
from __future__ import annotations

import heapq
import math
import time
from collections import deque
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum

from .errors import NoPath, UnknownNode
from .graph import Direction, WeightedGraph


class StepKind(str, Enum):
    ROOT = "root"
    DEPTH_STEP = "depth_step"
    FRONTIER_JUMP = "frontier_jump"


@dataclass
class TraversalResult:
    order: list[tuple[int, float]]
    step_kinds: list[StepKind]
    elapsed: float = 0.0
    algorithm: str = ""

    @property
    def ids(self) -> list[int]:
        return [n for n, _ in self.order]

    @property
    def weights(self) -> list[float]:
        return [w for _, w in self.order]

    def __len__(self) -> int:
        return len(self.order)


@dataclass
class PathResult:
    path: list[int]
    cost: float
    expanded_count: int = 0


class CostModel(str, Enum):
    UNIT = "unit"
    WEIGHT_DIFFERENCE = "weight_difference"

    def edge_cost(self, graph: WeightedGraph, u: int, v: int) -> float:
        if self is CostModel.UNIT:
            return 1.0
        return abs(graph.weight(u) - graph.weight(v))

    def path_cost(self, graph: WeightedGraph, path: list[int]) -> float:
        return sum(self.edge_cost(graph, u, v) for u, v in zip(path, path[1:]))


@dataclass
class Heuristic:
    """Table of remaining-cost estimates; nodes not listed estimate 0."""

    estimates: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self):
        for node, h in self.estimates.items():
            if not math.isfinite(h) or h < 0:
                raise ValueError(f"heuristic for node {node} must be finite and >= 0, got {h}")

    def __call__(self, node: int) -> float:
        return self.estimates.get(node, 0.0)

    @classmethod
    def parse(cls, text: str) -> Heuristic:
        """Read ``<node> <estimate>`` lines; ``#`` starts a comment."""
        table = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected '<node> <estimate>', got {raw!r}")
            table[int(parts[0])] = float(parts[1])
        return cls(table)


def _require(graph: WeightedGraph, *nodes: int) -> None:
    for n in nodes:
        if n not in graph:
            raise UnknownNode(n)


def reachable_set(graph: WeightedGraph, root: int, direction: Direction | str = Direction.DIRECTED) -> set[int]:
    _require(graph, root)
    adj = graph.adjacency(direction)
    seen = {root}
    stack = [root]
    while stack:
        for v in adj[stack.pop()]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def bfs(graph: WeightedGraph, root: int, direction: Direction | str = Direction.DIRECTED) -> TraversalResult:
    """Level-order traversal; nodes are marked when enqueued."""
    _require(graph, root)
    t0 = time.perf_counter()
    adj = graph.adjacency(direction)
    seen = {root}
    order = [root]
    queue = deque([root])
    while queue:
        for v in adj[queue.popleft()]:
            if v not in seen:
                seen.add(v)
                order.append(v)
                queue.append(v)
    elapsed = time.perf_counter() - t0
    return _result(graph, order, elapsed, "bfs")


def dfs(graph: WeightedGraph, root: int, direction: Direction | str = Direction.DIRECTED) -> TraversalResult:
    """Preorder depth-first traversal, children tried in adjacency order."""
    _require(graph, root)
    t0 = time.perf_counter()
    adj = graph.adjacency(direction)
    seen = {root}
    order = [root]
    # stack of iterators emulates recursive descent without the recursion limit
    stack: list[Iterator[int]] = [iter(adj[root])]
    while stack:
        for v in stack[-1]:
            if v not in seen:
                seen.add(v)
                order.append(v)
                stack.append(iter(adj[v]))
                break
        else:
            stack.pop()
    elapsed = time.perf_counter() - t0
    return _result(graph, order, elapsed, "dfs")


def _result(graph: WeightedGraph, order: list[int], elapsed: float, algorithm: str) -> TraversalResult:
    kinds = [StepKind.ROOT] + [StepKind.DEPTH_STEP] * (len(order) - 1)
    return TraversalResult([(n, graph.weight(n)) for n in order], kinds, elapsed, algorithm)


def bidirectional_search(graph: WeightedGraph, start: int, goal: int) -> PathResult:
    """Minimum-hop path from alternating full BFS waves.

    The start side (successors) expands first, then the goal side
    (predecessors). After a wave, among nodes seen by both sides the one with
    the least total hop count wins, smallest id on ties.
    """
    _require(graph, start, goal)
    if start == goal:
        return PathResult([start], 0.0, 0)
    sides = [
        ({start: 0}, {start: None}, [start], graph.adjacency(Direction.DIRECTED)),
        ({goal: 0}, {goal: None}, [goal], graph.reverse_adjacency()),
    ]
    expanded = 0
    turn = 0
    while sides[0][2] and sides[1][2]:
        dist, parent, wave, adj = sides[turn]
        other_dist = sides[1 - turn][0]
        nxt = []
        for u in wave:
            expanded += 1
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    nxt.append(v)
        sides[turn][2][:] = nxt
        met = [v for v in nxt if v in other_dist]
        if met:
            meet = min(met, key=lambda v: (dist[v] + other_dist[v], v))
            path = _walk(sides[0][1], meet)[::-1] + _walk(sides[1][1], meet)[1:]
            return PathResult(path, float(len(path) - 1), expanded)
        turn = 1 - turn
    raise NoPath(start, goal)


def _walk(parent: dict[int, int | None], node: int) -> list[int]:
    out = [node]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return out


def astar(
    graph: WeightedGraph,
    start: int,
    goal: int,
    cost: CostModel | str = CostModel.UNIT,
    h: Heuristic | None = None,
) -> PathResult:
    """Best-first on f = g + h. Ties go to smaller g, then smaller id.

    Nodes are reopened when a cheaper route appears, so any admissible
    heuristic yields a minimum-cost path even if it is not consistent.
    """
    _require(graph, start, goal)
    cost = CostModel(cost)
    h = h or Heuristic()
    succ = graph.adjacency(Direction.DIRECTED)
    g = {start: 0.0}
    parent: dict[int, int | None] = {start: None}
    heap = [(h(start), 0.0, start)]
    expanded = 0
    while heap:
        f, gu, u = heapq.heappop(heap)
        if gu > g[u]:
            continue
        expanded += 1
        if u == goal:
            return PathResult(_walk(parent, goal)[::-1], gu, expanded)
        for v in succ[u]:
            gv = gu + cost.edge_cost(graph, u, v)
            if v not in g or gv < g[v]:
                g[v] = gv
                parent[v] = u
                heapq.heappush(heap, (gv + h(v), gv, v))
    raise NoPath(start, goal)
