"""Seeded synthetic graphs.

All randomness comes from SplitMix64, a 64-bit generator defined entirely by
integer arithmetic, so a (spec, seed) pair yields the same graph everywhere.
Node ids are 1..n and edges are emitted in ascending (source, target) order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidSpec
from .graph import WeightedGraph

_MASK = (1 << 64) - 1
# xor-ed into the seed so weights and topology use unrelated streams
WEIGHT_STREAM = 0xD1B54A32D192ED03


class SplitMix64:
    """Steele, Lea and Flood's SplitMix64."""

    GAMMA = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + self.GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def below(self, n: int) -> int:
        """Unbiased integer in [0, n)."""
        if n <= 0:
            raise ValueError("n must be positive")
        floor = (1 << 64) % n
        while True:
            x = self.next_u64()
            if x >= floor:
                return x % n


class GraphKind(str, Enum):
    ERDOS_RENYI = "erdos_renyi"
    BARABASI_ALBERT = "barabasi_albert"
    CHAIN = "chain"
    LAYERED = "layered"


@dataclass(frozen=True)
class WeightDist:
    kind: str = "uniform01"
    value: float = 0.0

    @classmethod
    def parse(cls, text: str) -> WeightDist:
        """``uniform01`` or ``fixed:<c>``."""
        if text == "uniform01":
            return cls()
        if text.startswith("fixed:"):
            try:
                c = float(text.split(":", 1)[1])
            except ValueError:
                raise InvalidSpec(f"bad fixed weight in {text!r}") from None
            if not math.isfinite(c) or c < 0:
                raise InvalidSpec(f"fixed weight must be finite and >= 0, got {c}")
            return cls("fixed", c)
        raise InvalidSpec(f"unknown weight distribution {text!r}")

    def __str__(self) -> str:
        return "uniform01" if self.kind == "uniform01" else f"fixed:{self.value:g}"


@dataclass(frozen=True)
class GenSpec:
    kind: GraphKind
    n: int = 0
    p: float = 0.0
    m: int = 1
    levels: int = 1
    width: int = 1
    seed: int = 0
    weights: WeightDist = WeightDist()

    def __post_init__(self):
        object.__setattr__(self, "kind", GraphKind(self.kind))
        k = self.kind
        if k in (GraphKind.ERDOS_RENYI, GraphKind.BARABASI_ALBERT, GraphKind.CHAIN) and self.n < 1:
            raise InvalidSpec(f"n must be >= 1, got {self.n}")
        if k is GraphKind.ERDOS_RENYI and not 0 <= self.p <= 1:
            raise InvalidSpec(f"p must lie in [0, 1], got {self.p}")
        if k is GraphKind.BARABASI_ALBERT and not 1 <= self.m < self.n:
            raise InvalidSpec(f"need 1 <= m < n, got m={self.m}, n={self.n}")
        if k is GraphKind.LAYERED and (self.levels < 1 or self.width < 1):
            raise InvalidSpec("levels and width must be >= 1")


def generate(spec: GenSpec) -> WeightedGraph:
    rng = SplitMix64(spec.seed)
    if spec.kind is GraphKind.ERDOS_RENYI:
        n, edges = spec.n, _erdos_renyi(spec.n, spec.p, rng)
    elif spec.kind is GraphKind.BARABASI_ALBERT:
        n, edges = spec.n, _barabasi_albert(spec.n, spec.m, rng)
    elif spec.kind is GraphKind.CHAIN:
        n, edges = spec.n, [(i, i + 1) for i in range(1, spec.n)]
    else:
        n = spec.levels * spec.width
        edges = [
            (lvl * spec.width + a + 1, (lvl + 1) * spec.width + b + 1)
            for lvl in range(spec.levels - 1)
            for a in range(spec.width)
            for b in range(spec.width)
        ]
    topology = WeightedGraph(dict.fromkeys(range(1, n + 1), 0.0), edges)
    return assign_weights(topology, spec.weights, spec.seed ^ WEIGHT_STREAM)


def assign_weights(graph: WeightedGraph, dist: WeightDist, seed: int) -> WeightedGraph:
    """Same topology, weights drawn in ascending node-id order."""
    rng = SplitMix64(seed)
    if dist.kind == "fixed":
        weights = dict.fromkeys(sorted(graph.nodes), dist.value)
    else:
        weights = {n: rng.random() for n in sorted(graph.nodes)}
    return WeightedGraph({n: weights[n] for n in graph.nodes}, graph.edges)


def _erdos_renyi(n: int, p: float, rng: SplitMix64) -> list[tuple[int, int]]:
    # pairs are indexed k = (u-1)(n-1) + j; geometric gaps skip absent pairs
    total = n * (n - 1)
    if p <= 0 or total == 0:
        return []
    if p >= 1:
        return [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    log_q = math.log1p(-p)
    edges = []
    k = -1
    while True:
        k += 1 + int(math.log1p(-rng.random()) / log_q)
        if k >= total:
            return edges
        u, j = divmod(k, n - 1)
        u += 1
        v = j + 1 if j + 1 < u else j + 2
        edges.append((u, v))


def _barabasi_albert(n: int, m: int, rng: SplitMix64) -> list[tuple[int, int]]:
    edges = [(u, v) for u in range(1, m + 1) for v in range(1, m + 1) if u != v]
    # each edge endpoint appears once, so uniform picks are degree-proportional
    pool = [x for e in edges for x in e]
    for new in range(m + 1, n + 1):
        targets: set[int] = set()
        while len(targets) < m:
            t = pool[rng.below(len(pool))] if pool else rng.below(new - 1) + 1
            targets.add(t)
        for t in sorted(targets):
            edges.append((new, t))
            pool += (new, t)
    return edges
