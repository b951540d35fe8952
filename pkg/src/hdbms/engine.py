"""Hybrid depth-breadth traversal driven by node weights.

Two structures drive the walk:

* an expansion queue (FIFO). Expanding ``u`` visits at once, in adjacency
  order, every unvisited neighbor whose weight lies within ``tau`` of
  ``w(u)``, and queues them for expansion in turn. All other unvisited
  neighbors are parked in the frontier.
* a weight-ordered frontier. When the queue runs dry, the selection policy
  picks one frontier node relative to the most recently visited node. That
  node is visited and queued, and the walk continues from it.

A large ``tau`` therefore degenerates to BFS. With ``tau`` disabled, every
step is a policy choice, which tends to run deep along similar or heavy
nodes. On ties the policy prefers a neighbor of the current node.
"""
from __future__ import annotations

import time
from collections import deque
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from enum import Enum

from .errors import EmptyCandidates, UnknownNode
from .frontier import Frontier, weight_gap
from .graph import Direction, WeightedGraph
from .search import StepKind, TraversalResult

MIN_SCHEDULED_TAU = 0.01


class SelectionPolicy(str, Enum):
    SIMILARITY = "similarity"
    MAX_WEIGHT = "max_weight"


class TauSchedule(str, Enum):
    FIXED = "fixed"
    DENSITY_SCALED = "density_scaled"


@dataclass(frozen=True)
class HdbmsConfig:
    policy: SelectionPolicy = SelectionPolicy.SIMILARITY
    direction: Direction = Direction.DIRECTED
    tau: float | None = None
    tau_schedule: TauSchedule = TauSchedule.FIXED

    def __post_init__(self):
        object.__setattr__(self, "policy", SelectionPolicy(self.policy))
        object.__setattr__(self, "direction", Direction(self.direction))
        object.__setattr__(self, "tau_schedule", TauSchedule(self.tau_schedule))
        if self.tau is not None and not self.tau >= 0:
            raise ValueError(f"tau must be >= 0, got {self.tau}")

    def summary(self) -> str:
        tau = "off" if self.tau is None else f"{self.tau:g}"
        sched = "" if self.tau_schedule is TauSchedule.FIXED else f"/{self.tau_schedule.value}"
        return f"policy={self.policy.value} direction={self.direction.value} tau={tau}{sched}"


def _rank(policy: SelectionPolicy, current_weight: float, weight: float) -> tuple:
    # ranks compare without the node id; the id is the final tie-break
    if policy is SelectionPolicy.SIMILARITY:
        return (weight_gap(weight, current_weight), weight)
    return (-weight,)


def select_next(
    current: int,
    candidates: Iterable[int],
    graph: WeightedGraph,
    policy: SelectionPolicy | str = SelectionPolicy.SIMILARITY,
) -> int:
    """Pick a candidate by policy.

    similarity: smallest |w(c) - w(current)|, then smaller weight, then smaller id.
    max_weight: largest w(c), then smaller id.
    """
    policy = SelectionPolicy(policy)
    cw = graph.weight(current)
    best = None
    for c in candidates:
        key = (_rank(policy, cw, graph.weight(c)), c)
        if best is None or key < best:
            best = key
    if best is None:
        raise EmptyCandidates(f"no candidates to choose from at node {current}")
    return best[1]


def effective_tau(config: HdbmsConfig, graph: WeightedGraph) -> float | None:
    """Threshold after applying the schedule.

    density_scaled multiplies tau by |E| / (|V|(|V|-1)) and clamps the result
    to [0.01, tau].
    """
    if config.tau is None:
        return None
    if config.tau_schedule is TauSchedule.FIXED:
        return config.tau
    n, m = graph.node_count, graph.edge_count
    if config.direction is Direction.UNDIRECTED:
        m = len({frozenset(e) for e in graph.edges})
        density = 2 * m / (n * (n - 1)) if n > 1 else 1.0
    else:
        density = m / (n * (n - 1)) if n > 1 else 1.0
    return min(config.tau, max(MIN_SCHEDULED_TAU, config.tau * density))


def hdbms_traverse(
    graph: WeightedGraph,
    root: int,
    config: HdbmsConfig | None = None,
    feedback: Callable[[int, StepKind], None] | None = None,
) -> TraversalResult:
    """Visit every node reachable from ``root``; see the module docstring.

    ``feedback`` is called after each visit with the node and how it was
    reached. It cannot influence the walk yet.
    """
    config = config or HdbmsConfig()
    if root not in graph:
        raise UnknownNode(root)
    t0 = time.perf_counter()
    tau = effective_tau(config, graph)
    policy = config.policy
    adj = graph.adjacency(config.direction)
    weight = graph._weights

    visited = {root}
    order = [root]
    kinds = [StepKind.ROOT]
    frontier = Frontier()
    queue = deque([root])
    current = root
    if feedback:
        feedback(root, StepKind.ROOT)

    while True:
        while queue:
            u = queue.popleft()
            wu = weight[u]
            for v in adj[u]:
                if v in visited:
                    continue
                if tau is not None and weight_gap(weight[v], wu) <= tau:
                    visited.add(v)
                    frontier.discard(v)
                    order.append(v)
                    kinds.append(StepKind.DEPTH_STEP)
                    queue.append(v)
                    current = v
                    if feedback:
                        feedback(v, StepKind.DEPTH_STEP)
                else:
                    frontier.add(v, weight[v])
        if not frontier:
            break

        cw = weight[current]
        pick = frontier.heaviest() if policy is SelectionPolicy.MAX_WEIGHT else frontier.nearest(cw)
        local = [v for v in adj[current] if v in frontier]
        if local:
            near = select_next(current, local, graph, policy)
            if _rank(policy, cw, weight[near]) == _rank(policy, cw, weight[pick]):
                pick = near
        kind = StepKind.DEPTH_STEP if pick in local else StepKind.FRONTIER_JUMP

        frontier.discard(pick)
        visited.add(pick)
        order.append(pick)
        kinds.append(kind)
        queue.append(pick)
        current = pick
        if feedback:
            feedback(pick, kind)

    elapsed = time.perf_counter() - t0
    return TraversalResult([(n, weight[n]) for n in order], kinds, elapsed, "hdbms")
