from __future__ import annotations

import pytest

from hdbms import GenSpec, WeightDist, generate
from hdbms.datasets import graph2, social_graph
from hdbms.generators import SplitMix64


def corpus(count: int = 500, max_n: int = 60, seed: int = 2024):
    """Seeded mix of Erdos-Renyi, Barabasi-Albert, chain and layered graphs."""
    rng = SplitMix64(seed)
    kinds = ("erdos_renyi", "barabasi_albert", "chain", "layered")
    specs = []
    for i in range(count):
        kind = kinds[i % 4]
        n = 1 + rng.below(max_n)
        # constant weights turn every selection into a tie
        weights = WeightDist("fixed", 0.5) if i % 25 == 0 else WeightDist()
        if kind == "erdos_renyi":
            spec = GenSpec(kind, n=n, p=rng.below(30) / 100, seed=i, weights=weights)
        elif kind == "barabasi_albert":
            n = max(n, 2)
            spec = GenSpec(kind, n=n, m=1 + rng.below(min(n - 1, 4)), seed=i, weights=weights)
        elif kind == "chain":
            spec = GenSpec(kind, n=n, seed=i, weights=weights)
        else:
            levels = 1 + rng.below(6)
            width = 1 + rng.below(max(1, max_n // levels))
            spec = GenSpec(kind, levels=levels, width=width, seed=i, weights=weights)
        specs.append(spec)
    return [generate(s) for s in specs]


@pytest.fixture(scope="session")
def g2():
    return graph2()


@pytest.fixture(scope="session")
def social():
    return social_graph()


@pytest.fixture(scope="session")
def graph_corpus():
    return corpus()


_ACCEPTANCE: list[str] = []


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line; printed together at the end of the run."""

    def record(name: str, ok: bool, detail: str, extra=()) -> None:
        lines = [f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}", *(f"    {x}" for x in extra)]
        _ACCEPTANCE.extend(lines)
        print(*lines, sep="\n")

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
