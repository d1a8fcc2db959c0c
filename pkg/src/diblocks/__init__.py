"""diblocks: 2-blocks, strong articulation points, strong bridges, and
sparse structure-preserving spanning subgraphs for directed graphs."""

from .blocks import (
    BlockFamily,
    BlockGraph2D,
    PairRelation,
    block_2e_at_vertex,
    block_graph_2d,
    blocks_2d_at_vertex,
    blocks_2d_combined,
    blocks_2d_direct,
    blocks_2e_bridge,
    blocks_2e_dom,
    blocks_2s_dom,
    blocks_2s_sap,
    neighborhood_2d,
    strong_reach_targets,
    two_reach_targets,
    unguarded_targets,
)
from .connectivity import (
    ConnectivityReport,
    is_2edge_connected,
    is_2vertex_connected,
    report,
    strong_articulation_points,
    strong_bridges,
)
from .dominators import (
    DominatorTree,
    EdgeSplitGraph,
    FlowGraph,
    dominator_preserving_pair,
    dominator_tree,
    edge_dominator_preserving_pair,
    edge_dominators,
    edge_split_all,
    edge_split_out,
    nontrivial_dominators,
    unguarded_vertices,
)
from .errors import (
    GraphInputError,
    NotStronglyConnectedError,
    OracleSizeError,
    PreconditionError,
)
from .generate import random_strongly_connected
from .graphs import (
    DiGraph,
    Partition,
    UndirectedGraph,
    biconnected_blocks,
    connected_components,
    delete_edges,
    delete_vertices,
    from_edge_list,
    induced_subgraph,
    is_strongly_connected,
    reverse,
    scc,
)
from .mscss import (
    FeasibilityReport,
    SpanningSolution,
    mscss_same_2d,
    mscss_same_2e,
    mscss_same_2s,
    mscss_same_saps,
    scss_branching,
    twovcss_georgiadis,
    verify_solution,
)

__version__ = "0.1.0"
