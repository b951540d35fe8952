import itertools

import pytest
from hypothesis import given, strategies as st

from hdbms import (
    EmptyCandidates,
    HdbmsConfig,
    StepKind,
    UnknownNode,
    WeightedGraph,
    bfs,
    effective_tau,
    hdbms_traverse,
    reachable_set,
    select_next,
)

from . import oracles
from .conftest import corpus

GRAPH2_HDBMS = [1, 2, 5, 11, 3, 9, 10, 12, 6, 8, 4, 7]
SOCIAL_PREFIX = [1, 2, 3, 6, 10, 8, 12, 13, 14]
# worked out step by step by the brute-force simulator in tests/oracles.py
SOCIAL_FULL = SOCIAL_PREFIX + [9, 15, 16, 7, 5, 17, 18, 11, 4, 19, 20, 21]

SIMILARITY_BAND = HdbmsConfig(policy="similarity", direction="directed", tau=0.1)
SOCIAL = HdbmsConfig(policy="max_weight", direction="undirected")


def test_graph2_similarity_order(g2):
    r = hdbms_traverse(g2, 1, SIMILARITY_BAND)
    assert r.ids == GRAPH2_HDBMS
    assert r.algorithm == "hdbms"
    kinds = dict(zip(r.ids, r.step_kinds))
    # 6, 8 and 4 are picked from the frontier without an edge from the node
    # before them; 7 is also a policy pick but follows its predecessor 4
    assert [n for n in r.ids if kinds[n] is StepKind.FRONTIER_JUMP] == [6, 8, 4]


def test_graph2_without_band_cannot_start_with_2(g2):
    # node 5 matches node 1's weight exactly, so any similarity rule without
    # a band moves 1 -> 5; the published order needs the band
    assert select_next(1, g2.successors(1), g2, "similarity") == 5
    assert hdbms_traverse(g2, 1, HdbmsConfig(tau=None)).ids[:2] == [1, 5]


def test_graph2_band_range(g2):
    # any band in [0.1, 0.2) reproduces the order
    for tau in (0.1, 0.12, 0.15, 0.19):
        assert hdbms_traverse(g2, 1, HdbmsConfig(tau=tau)).ids == GRAPH2_HDBMS
    assert hdbms_traverse(g2, 1, HdbmsConfig(tau=0.2)).ids != GRAPH2_HDBMS


def test_social_max_weight(social):
    r = hdbms_traverse(social, 1, SOCIAL)
    assert r.ids[:9] == SOCIAL_PREFIX
    assert r.ids == SOCIAL_FULL == oracles.hdbms_bruteforce(social, 1, "max_weight", None, "undirected")
    assert r.weights[:4] == [0.3, 0.4, 0.5, 0.8]


def test_single_node():
    g = WeightedGraph({7: 0.4})
    r = hdbms_traverse(g, 7)
    assert r.ids == [7] and r.step_kinds == [StepKind.ROOT]


def test_unknown_root(g2):
    with pytest.raises(UnknownNode):
        hdbms_traverse(g2, 42)


def test_select_next_examples(g2):
    assert select_next(2, [3, 5, 11], g2, "similarity") == 5
    assert select_next(1, [2, 4, 5, 11], g2, "max_weight") == 2
    assert select_next(1, [4], g2, "similarity") == 4
    with pytest.raises(EmptyCandidates):
        select_next(1, [], g2)


@given(st.permutations([2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]), st.sampled_from(range(1, 13)), st.sampled_from(["similarity", "max_weight"]))
def test_select_next_ignores_presentation_order(g2, perm, current, policy):
    assert select_next(current, perm, g2, policy) == select_next(current, sorted(perm), g2, policy)


def test_effective_tau(g2):
    assert effective_tau(HdbmsConfig(tau=0.2), g2) == 0.2
    assert effective_tau(HdbmsConfig(), g2) is None
    full = WeightedGraph(dict.fromkeys(range(1, 5), 0.5), [(u, v) for u in range(1, 5) for v in range(1, 5) if u != v])
    assert effective_tau(HdbmsConfig(tau=0.5, tau_schedule="density_scaled"), full) == 0.5
    got = effective_tau(HdbmsConfig(tau=0.5, tau_schedule="density_scaled"), g2)
    assert got == pytest.approx(0.5 * 21 / 132, abs=1e-15)
    assert round(got, 4) == 0.0795
    # clamp from below
    sparse = WeightedGraph(dict.fromkeys(range(1, 101), 0.5), [(1, 2)])
    assert effective_tau(HdbmsConfig(tau=0.5, tau_schedule="density_scaled"), sparse) == 0.01


def test_effective_tau_undirected_density(g2):
    # 21 distinct node pairs out of 66
    cfg = HdbmsConfig(tau=0.5, tau_schedule="density_scaled", direction="undirected")
    assert effective_tau(cfg, g2) == pytest.approx(0.5 * 2 * 21 / 132)


def test_negative_tau_rejected():
    with pytest.raises(ValueError):
        HdbmsConfig(tau=-0.1)


def test_huge_band_is_bfs(graph_corpus):
    for g in graph_corpus[:200]:
        for direction in ("directed", "undirected"):
            cfg = HdbmsConfig(tau=10.0, direction=direction)
            assert hdbms_traverse(g, g.nodes[0], cfg).ids == bfs(g, g.nodes[0], direction).ids


CONFIGS = [
    HdbmsConfig(policy=p, direction=d, tau=t, tau_schedule=s)
    for p in ("similarity", "max_weight")
    for d in ("directed", "undirected")
    for t, s in ((None, "fixed"), (0.0, "fixed"), (0.1, "fixed"), (0.3, "fixed"), (0.5, "density_scaled"))
]


def test_coverage_permutation_and_soundness(graph_corpus):
    for g in graph_corpus[:120]:
        root = g.nodes[len(g.nodes) // 2]
        for cfg in CONFIGS:
            r = hdbms_traverse(g, root, cfg)
            ids = r.ids
            assert len(ids) == len(set(ids))
            assert set(ids) == reachable_set(g, root, cfg.direction)
            adj = g.adjacency(cfg.direction)
            seen = {root}
            for v, kind in zip(ids[1:], r.step_kinds[1:]):
                assert any(v in adj[u] for u in seen), "visited a node nobody discovered"
                assert kind in (StepKind.DEPTH_STEP, StepKind.FRONTIER_JUMP)
                seen.add(v)


def test_jump_kinds_mark_non_adjacent_moves(social):
    r = hdbms_traverse(social, 1, SOCIAL)
    adj = social.adjacency("undirected")
    for prev, v, kind in zip(r.ids, r.ids[1:], r.step_kinds[1:]):
        assert (kind is StepKind.DEPTH_STEP) == (v in adj[prev])


def test_lower_tau_keeps_visited_set(graph_corpus):
    for g in graph_corpus[:100]:
        root = g.nodes[0]
        sets = {frozenset(hdbms_traverse(g, root, HdbmsConfig(tau=t)).ids) for t in (None, 0.0, 0.05, 0.2, 0.6, 2.0)}
        assert len(sets) == 1


def test_determinism(social):
    runs = {tuple(hdbms_traverse(social, 1, cfg).ids) for cfg in [SOCIAL] * 5}
    assert len(runs) == 1


def test_feedback_hook_sees_every_visit(social):
    seen = []
    r = hdbms_traverse(social, 1, SOCIAL, feedback=lambda node, kind: seen.append((node, kind)))
    assert seen == list(zip(r.ids, r.step_kinds))


def test_matches_bruteforce_on_small_graphs():
    cases = 0
    for weights, edges in oracles.small_graphs(8, weight_levels=(0.1, 0.2, 0.3, 0.5, 0.9), limit_per_size=80):
        g = WeightedGraph(weights, edges)
        for policy, direction, tau in itertools.product(("similarity", "max_weight"), ("directed", "undirected"), (None, 0.1, 0.2)):
            cfg = HdbmsConfig(policy=policy, direction=direction, tau=tau)
            for root in g.nodes:
                assert hdbms_traverse(g, root, cfg).ids == oracles.hdbms_bruteforce(g, root, policy, tau, direction)
                cases += 1
    assert cases > 10_000


def test_matches_bruteforce_on_generated_graphs():
    for g in corpus(200, max_n=8, seed=11):
        for policy in ("similarity", "max_weight"):
            for direction in ("directed", "undirected"):
                cfg = HdbmsConfig(policy=policy, direction=direction, tau=0.25)
                root = g.nodes[0]
                assert hdbms_traverse(g, root, cfg).ids == oracles.hdbms_bruteforce(g, root, policy, 0.25, direction)
