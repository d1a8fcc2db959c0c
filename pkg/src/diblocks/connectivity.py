"""Strong articulation points, strong bridges, and the 2-connectivity tests.

A strong articulation point is a vertex whose removal leaves a strongly
connected graph disconnected; a strong bridge is an edge doing the same.
Both are computed from dominator information of a single root (vertex 0 by
default); the answer is root-independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dominators import (
    Edge,
    FlowGraph,
    dominator_tree,
    edge_dominators,
    nontrivial_dominators,
)
from .graphs import (
    DiGraph,
    delete_vertices,
    is_strongly_connected,
    require_strongly_connected,
    reverse,
)


@dataclass(frozen=True)
class ConnectivityReport:
    saps: tuple[int, ...]
    bridges: tuple[Edge, ...]
    t_sap: int
    t_sb: int
    is2v: bool
    is2e: bool


def strong_articulation_points(g: DiGraph, root: int = 0) -> set[int]:
    """Vertices whose deletion disconnects the strongly connected input.

    Union of the non-trivial dominators of the flowgraphs rooted at ``root``
    in the graph and its reversal, plus the root itself when its own removal
    disconnects the rest.
    """
    require_strongly_connected(g, "strong_articulation_points")
    if g.n < 2:
        raise ValueError("need at least 2 vertices")
    saps = nontrivial_dominators(dominator_tree(FlowGraph(g, root)))
    saps |= nontrivial_dominators(dominator_tree(FlowGraph(reverse(g), root)))
    rest, _ = delete_vertices(g, {root})
    if not is_strongly_connected(rest):
        saps.add(root)
    return saps


def strong_bridges(g: DiGraph, root: int = 0) -> set[Edge]:
    """Edges whose deletion disconnects the strongly connected input.

    Edge dominators of the flowgraph at ``root`` plus the reversed edge
    dominators of the reversal flowgraph.
    """
    require_strongly_connected(g, "strong_bridges")
    bridges = edge_dominators(FlowGraph(g, root))
    for x, y in edge_dominators(FlowGraph(reverse(g), root)):
        bridges.add((y, x))
    return bridges


def is_2vertex_connected(g: DiGraph) -> bool:
    """True iff strongly connected, n >= 3, and free of strong articulation points."""
    if g.n < 3 or not is_strongly_connected(g):
        return False
    return not strong_articulation_points(g)


def is_2edge_connected(g: DiGraph) -> bool:
    """True iff strongly connected and free of strong bridges."""
    if g.n < 1 or not is_strongly_connected(g):
        return False
    if g.n == 1:
        return True
    return not strong_bridges(g)


def report(g: DiGraph) -> ConnectivityReport:
    """Bundle of SAPs, strong bridges, their counts, and the 2-connectivity flags."""
    require_strongly_connected(g, "report")
    if g.n == 1:
        return ConnectivityReport((), (), 0, 0, False, True)
    saps = tuple(sorted(strong_articulation_points(g)))
    bridges = tuple(sorted(strong_bridges(g)))
    return ConnectivityReport(
        saps=saps,
        bridges=bridges,
        t_sap=len(saps),
        t_sb=len(bridges),
        is2v=g.n >= 3 and not saps,
        is2e=not bridges,
    )
