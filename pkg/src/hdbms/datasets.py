"""The social-network edge list used throughout the examples and tests.

``graph2()`` is the same list restricted to ids 1..12: twelve nodes and
twenty-one edges, with 1 -> {2, 4, 5, 11} and 2 -> {3, 5, 11}.
"""
from __future__ import annotations

from .graph import WeightedGraph, induced_subgraph, parse_edge_list

SOCIAL_EDGE_LIST = """\
# social network: node|probability pairs, three edges per line
1|0.3 2|0.4    1|0.3 4|0.1    1|0.3 5|0.3
1|0.3 11|0.2   2|0.4 3|0.5    2|0.4 5|0.3
2|0.4 11|0.2   3|0.5 6|0.8    3|0.5 9|0.6
4|0.1 5|0.3    4|0.1 7|0.4    5|0.3 6|0.8
5|0.3 8|0.9    6|0.8 10|0.7   7|0.4 8|0.9
7|0.4 12|0.8   8|0.9 10|0.7   8|0.9 12|0.8
9|0.6 10|0.7   10|0.7 12|0.8  11|0.2 3|0.5
12|0.8 13|0.7  13|0.7 14|0.6  14|0.6 15|0.5
15|0.5 16|0.4  16|0.4 17|0.3  17|0.3 18|0.2
18|0.2 19|0.1  19|0.1 20|0.05 20|0.05 21|0.02
"""


def social_graph() -> WeightedGraph:
    return parse_edge_list(SOCIAL_EDGE_LIST)


def graph2() -> WeightedGraph:
    return induced_subgraph(social_graph(), range(1, 13))
