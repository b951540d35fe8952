"""Node-weighted directed graphs and the ``u|w v|w`` edge-list format."""
from __future__ import annotations

import logging
import math
import re
from collections.abc import Iterable, Mapping
from decimal import Decimal
from enum import Enum

from .errors import MalformedToken, SelfLoop, UnknownNode, WeightConflict

log = logging.getLogger(__name__)

WEIGHT_TOLERANCE = 1e-9

_TOKEN = re.compile(r"^([0-9]+)\|((?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)$")


class Direction(str, Enum):
    DIRECTED = "directed"
    UNDIRECTED = "undirected"


class WeightedGraph:
    """Immutable node-weighted directed graph.

    Nodes keep the order in which they were first added; each adjacency list
    keeps edge insertion order. Duplicate edges are dropped and counted in
    ``duplicate_edges``.
    """

    __slots__ = ("_weights", "_succ", "_pred", "_edges", "_undirected", "duplicate_edges")

    def __init__(
        self,
        weights: Mapping[int, float],
        edges: Iterable[tuple[int, int]] = (),
    ):
        self._weights: dict[int, float] = {}
        for node, w in weights.items():
            self._weights[int(node)] = _check_weight(node, float(w))
        succ: dict[int, list[int]] = {n: [] for n in self._weights}
        pred: dict[int, list[int]] = {n: [] for n in self._weights}
        seen: set[tuple[int, int]] = set()
        kept: list[tuple[int, int]] = []
        dupes = 0
        for u, v in edges:
            if u not in self._weights:
                raise UnknownNode(u)
            if v not in self._weights:
                raise UnknownNode(v)
            if u == v:
                raise SelfLoop(f"self-loop on node {u}")
            if (u, v) in seen:
                dupes += 1
                continue
            seen.add((u, v))
            kept.append((u, v))
            succ[u].append(v)
            pred[v].append(u)
        self._succ = {n: tuple(vs) for n, vs in succ.items()}
        self._pred = {n: tuple(vs) for n, vs in pred.items()}
        self._edges = tuple(kept)
        self._undirected: dict[int, tuple[int, ...]] | None = None
        self.duplicate_edges = dupes

    # -- queries ---------------------------------------------------------

    @property
    def nodes(self) -> list[int]:
        return list(self._weights)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def weights(self) -> Mapping[int, float]:
        return dict(self._weights)

    def weight(self, node: int) -> float:
        try:
            return self._weights[node]
        except KeyError:
            raise UnknownNode(node) from None

    def __contains__(self, node: object) -> bool:
        return node in self._weights

    def __len__(self) -> int:
        return len(self._weights)

    @property
    def node_count(self) -> int:
        return len(self._weights)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def successors(self, node: int) -> tuple[int, ...]:
        try:
            return self._succ[node]
        except KeyError:
            raise UnknownNode(node) from None

    def predecessors(self, node: int) -> tuple[int, ...]:
        try:
            return self._pred[node]
        except KeyError:
            raise UnknownNode(node) from None

    def neighbors(self, node: int, direction: Direction | str = Direction.DIRECTED) -> tuple[int, ...]:
        """Out-neighbors, or in undirected mode out-neighbors followed by in-neighbors."""
        if Direction(direction) is Direction.DIRECTED:
            return self.successors(node)
        if node not in self._weights:
            raise UnknownNode(node)
        return self._undirected_adj()[node]

    def _undirected_adj(self) -> dict[int, tuple[int, ...]]:
        if self._undirected is None:
            und = {}
            for n in self._weights:
                out = self._succ[n]
                extra = tuple(p for p in self._pred[n] if p not in out)
                und[n] = out + extra if extra else out
            self._undirected = und
        return self._undirected

    def adjacency(self, direction: Direction | str = Direction.DIRECTED) -> dict[int, tuple[int, ...]]:
        """Whole adjacency map for one direction mode; treat as read-only."""
        if Direction(direction) is Direction.DIRECTED:
            return self._succ
        return self._undirected_adj()

    def reverse_adjacency(self) -> dict[int, tuple[int, ...]]:
        return self._pred

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._weights == other._weights and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((frozenset(self._weights.items()), self._edges))

    def __repr__(self) -> str:
        return f"WeightedGraph(nodes={self.node_count}, edges={self.edge_count})"


def _check_weight(node: object, w: float) -> float:
    if not math.isfinite(w) or w < 0:
        raise MalformedToken(f"weight of node {node} must be finite and non-negative, got {w}")
    if w > 1:
        log.warning("node %s has weight %s outside [0, 1]", node, w)
    return w


def format_weight(w: float) -> str:
    """Shortest round-tripping positional form: 0.5 -> '0.5', 1.0 -> '1'."""
    text = format(Decimal(repr(w)), "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def parse_edge_list(text: str) -> WeightedGraph:
    """Parse ``u|w_u v|w_v`` pairs; several pairs may share a line.

    ``#`` starts a comment line. A line holding exactly one token declares an
    isolated node.
    """
    weights: dict[int, float] = {}
    edges: list[tuple[int, int]] = []

    def node(token: str, lineno: int) -> int:
        m = _TOKEN.match(token)
        if m is None:
            raise MalformedToken("expected <int>|<decimal>", line=lineno, token=token)
        nid, w = int(m.group(1)), float(m.group(2))
        if nid <= 0:
            raise MalformedToken("node ids must be positive", line=lineno, token=token)
        if not math.isfinite(w):
            raise MalformedToken("weight is not finite", line=lineno, token=token)
        known = weights.get(nid)
        if known is None:
            weights[nid] = w
        elif abs(known - w) > WEIGHT_TOLERANCE:
            raise WeightConflict(
                f"node {nid} has weight {format_weight(known)} and {format_weight(w)}",
                line=lineno,
                token=token,
            )
        return nid

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            node(tokens[0], lineno)
            continue
        if len(tokens) % 2:
            raise MalformedToken("dangling node token without a partner", line=lineno, token=tokens[-1])
        for a, b in zip(tokens[::2], tokens[1::2]):
            u, v = node(a, lineno), node(b, lineno)
            if u == v:
                raise SelfLoop(f"self-loop on node {u}", line=lineno, token=f"{a} {b}")
            edges.append((u, v))

    graph = WeightedGraph(weights, edges)
    if graph.duplicate_edges:
        log.warning("dropped %d duplicate edge(s)", graph.duplicate_edges)
    return graph


def serialize_edge_list(graph: WeightedGraph) -> str:
    """One edge per line in construction order, then isolated nodes."""
    w = graph._weights
    lines = [f"{u}|{format_weight(w[u])} {v}|{format_weight(w[v])}" for u, v in graph.edges]
    touched = {n for e in graph.edges for n in e}
    lines += [f"{n}|{format_weight(wn)}" for n, wn in w.items() if n not in touched]
    return "\n".join(lines) + "\n" if lines else ""


def neighbors(graph: WeightedGraph, v: int, direction: Direction | str = Direction.DIRECTED) -> list[int]:
    return list(graph.neighbors(v, direction))


def induced_subgraph(graph: WeightedGraph, keep: Iterable[int]) -> WeightedGraph:
    keep = set(keep)
    for n in keep:
        if n not in graph:
            raise UnknownNode(n)
    weights = {n: w for n, w in graph._weights.items() if n in keep}
    return WeightedGraph(weights, [(u, v) for u, v in graph.edges if u in keep and v in keep])


def to_dot(graph: WeightedGraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for n in sorted(graph._weights):
        lines.append(f'  {n} [label="{n} ({format_weight(graph._weights[n])})"];')
    for u, v in graph.edges:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
