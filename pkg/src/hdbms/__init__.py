"""Weight-guided hybrid depth/breadth graph traversal with baseline searches."""
from .engine import HdbmsConfig, SelectionPolicy, TauSchedule, effective_tau, hdbms_traverse, select_next
from .errors import (
    EmptyCandidates,
    GraphError,
    InvalidSpec,
    MalformedToken,
    NoPath,
    SelfLoop,
    UnknownNode,
    WeightConflict,
)
from .frontier import Frontier
from .generators import GenSpec, GraphKind, SplitMix64, WeightDist, assign_weights, generate
from .graph import (
    Direction,
    WeightedGraph,
    induced_subgraph,
    neighbors,
    parse_edge_list,
    serialize_edge_list,
    to_dot,
)
from .metrics import (
    BenchResult,
    EngineSpec,
    MetricsReport,
    bench,
    compare_report,
    completeness,
    optimality_dcg,
    order_quality_macd,
    scaling_report,
)
from .search import (
    CostModel,
    Heuristic,
    PathResult,
    StepKind,
    TraversalResult,
    astar,
    bfs,
    bidirectional_search,
    dfs,
    reachable_set,
)

__version__ = "0.1.0"
