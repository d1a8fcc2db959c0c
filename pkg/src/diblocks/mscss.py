"""Sparse strongly connected spanning subgraphs that preserve connectivity
structure: the SAP set, or a chosen block family.

Construction pattern shared by all kinds: a pair of dominator-preserving
(or edge-dominator-preserving) spanning-tree unions at one root keeps the
cut structure intact, then a patch loop re-glues, for every cut vertex or
bridge, the SCC fragments its deletion would leave behind. The strongly
connected spanning subgraph subroutine is the branching union (out-tree
plus in-tree at one root, at most 2(n-1) edges); every returned solution
is re-verified by recomputation, never assumed feasible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import blocks_2d_direct, blocks_2e_dom, blocks_2s_dom
from .connectivity import is_2vertex_connected, strong_articulation_points, strong_bridges
from .dominators import (
    Edge,
    FlowGraph,
    dominator_preserving_pair,
    edge_dominator_preserving_pair,
)
from .errors import GraphInputError, PreconditionError
from .graphs import (
    DiGraph,
    delete_edges,
    delete_vertices,
    is_strongly_connected,
    require_strongly_connected,
    reverse,
    scc,
)

KINDS = ("2vcss", "saps", "2s", "2e", "2d")


@dataclass(frozen=True)
class FeasibilityReport:
    strongly_connected: bool
    structure_preserved: bool
    edge_count: int
    budget_bound: int
    within_budget: bool

    @property
    def ok(self) -> bool:
        return self.strongly_connected and self.structure_preserved


@dataclass(frozen=True)
class SpanningSolution:
    kind: str
    edges: tuple[Edge, ...]
    edge_count: int
    budget_bound: int
    feasible: bool
    within_budget: bool
    budget_adjusted: bool  # True when a tree pair blew its default budget


def _structure_preserved(g: DiGraph, sub: DiGraph, kind: str) -> bool:
    if kind == "2vcss":
        return is_2vertex_connected(sub)
    if kind == "saps":
        if g.n < 2:
            return True
        if not is_strongly_connected(sub):
            return False
        return strong_articulation_points(sub) == strong_articulation_points(g)
    if kind == "2s":
        return blocks_2s_dom(sub) == blocks_2s_dom(g)
    if kind == "2e":
        return blocks_2e_dom(sub) == blocks_2e_dom(g)
    if kind == "2d":
        return blocks_2d_direct(sub) == blocks_2d_direct(g)
    raise GraphInputError(f"unknown solution kind {kind!r}")


def _within_budget(kind: str, count: int, bound: int) -> bool:
    # the 2e bound is strict by its derivation; the rest are inclusive
    return count < bound if kind == "2e" else count <= bound


def verify_solution(g: DiGraph, s: SpanningSolution) -> FeasibilityReport:
    """Re-run the preserved-structure computation on (V, s.edges) and compare."""
    if not set(s.edges) <= set(g.edges):
        raise GraphInputError("solution edges must come from the input graph")
    sub = DiGraph(g.n, s.edges)
    return FeasibilityReport(
        strongly_connected=is_strongly_connected(sub),
        structure_preserved=_structure_preserved(g, sub, s.kind),
        edge_count=len(s.edges),
        budget_bound=s.budget_bound,
        within_budget=_within_budget(s.kind, len(s.edges), s.budget_bound),
    )


def _finish(g: DiGraph, kind: str, edges: set[Edge], bound: int,
            adjusted: bool) -> SpanningSolution:
    sub = DiGraph(g.n, edges)
    feasible = is_strongly_connected(sub) and _structure_preserved(g, sub, kind)
    return SpanningSolution(
        kind=kind,
        edges=tuple(sorted(edges)),
        edge_count=len(edges),
        budget_bound=bound,
        feasible=feasible,
        within_budget=_within_budget(kind, len(edges), bound),
        budget_adjusted=adjusted,
    )


# ---------------------------------------------------------------------------
# subroutines


def _out_tree(g: DiGraph, cell: set[int], root: int) -> set[Edge]:
    """Edges of a BFS spanning out-tree of the induced subgraph on cell."""
    tree: set[Edge] = set()
    seen = {root}
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for w in g.out[v]:
            if w in cell and w not in seen:
                seen.add(w)
                tree.add((v, w))
                queue.append(w)
    return tree


def _in_tree(g: DiGraph, cell: set[int], root: int) -> set[Edge]:
    """Edges of a spanning in-tree (everything reaches root) on cell."""
    tree: set[Edge] = set()
    seen = {root}
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for w in g.inn[v]:
            if w in cell and w not in seen:
                seen.add(w)
                tree.add((w, v))
                queue.append(w)
    return tree


def scss_branching(g: DiGraph, root: int) -> set[Edge]:
    """Strongly connected spanning subgraph with at most 2(n-1) edges:
    union of an out-branching and an in-branching at the root."""
    require_strongly_connected(g, "scss_branching")
    if not (0 <= root < g.n):
        raise GraphInputError(f"root {root} out of range for n={g.n}")
    cell = set(range(g.n))
    return _out_tree(g, cell, root) | _in_tree(g, cell, root)


def _subset_strongly_connected(edges: set[Edge], cell: set[int]) -> bool:
    if len(cell) <= 1:
        return True
    fwd: dict[int, list[int]] = {v: [] for v in cell}
    back: dict[int, list[int]] = {v: [] for v in cell}
    for u, v in edges:
        if u in cell and v in cell:
            fwd[u].append(v)
            back[v].append(u)
    start = next(iter(cell))
    for adj in (fwd, back):
        seen = {start}
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(cell):
            return False
    return True


def _tree_pairs_at(g: DiGraph, v: int) -> tuple[set[Edge], int, int]:
    """T1 u T2 on g(v) plus reversed T3 u T4 on reverse(g)(v); returns the
    combined edges and the two pair sizes for budget accounting."""
    t1, t2 = dominator_preserving_pair(FlowGraph(g, v))
    t3, t4 = dominator_preserving_pair(FlowGraph(reverse(g), v))
    fwd = t1 | t2
    bwd = {(y, x) for x, y in t3 | t4}
    return fwd | bwd, len(fwd), len(bwd)


def _georgiadis_edges(g: DiGraph, v: int) -> tuple[set[Edge], int, bool]:
    """Core of the 2VCSS construction: tree pairs at v plus a branching
    SCSS of the graph without v. Returns (edges, bound, adjusted)."""
    n = g.n
    edges, p1, p2 = _tree_pairs_at(g, v)
    sub, kept = delete_vertices(g, {v})
    if sub.n >= 1:
        for a, b in scss_branching(sub, 0) if sub.n > 1 else ():
            edges.add((kept[a], kept[b]))
    adjusted = p1 > 2 * (n - 1) or p2 > 2 * (n - 1)
    bound = (p1 + p2 if adjusted else 4 * (n - 1)) + 2 * (n - 2)
    return edges, bound, adjusted


def twovcss_georgiadis(g: DiGraph) -> SpanningSolution:
    """2-vertex-connected spanning subgraph of a 2-vertex-connected graph."""
    if not is_2vertex_connected(g):
        raise PreconditionError("twovcss_georgiadis needs a 2-vertex-connected graph")
    edges, bound, adjusted = _georgiadis_edges(g, 0)
    return _finish(g, "2vcss", edges, bound, adjusted)


def _saps_core(g: DiGraph) -> tuple[set[Edge], int, bool]:
    """SAP-preserving SCSS construction; input strongly connected, n >= 2."""
    n = g.n
    if is_2vertex_connected(g):
        return _georgiadis_edges(g, 0)
    saps = strong_articulation_points(g)
    if len(saps) == n:
        # any SCSS keeps every vertex critical
        return scss_branching(g, 0), 2 * (n - 1), False
    v = min(set(range(n)) - saps)
    return _georgiadis_edges(g, v)


def mscss_same_saps(g: DiGraph) -> SpanningSolution:
    """Strongly connected spanning subgraph with the same SAP set."""
    require_strongly_connected(g, "mscss_same_saps")
    if g.n == 1:
        return _finish(g, "saps", set(), 0, False)
    edges, bound, adjusted = _saps_core(g)
    return _finish(g, "saps", edges, bound, adjusted)


def mscss_same_2s(g: DiGraph, skip_blockless_sccs: bool = False) -> SpanningSolution:
    """Strongly connected spanning subgraph with the same 2-strong blocks.

    After the SAP-preserving core, every SCC left by deleting a SAP is
    re-glued with a branching union if the current edge set does not keep
    it strongly connected. SCCs containing no block vertex can be skipped
    without losing feasibility (``skip_blockless_sccs``).
    """
    require_strongly_connected(g, "mscss_same_2s")
    n = g.n
    if n == 1:
        return _finish(g, "2s", set(), 0, False)
    if is_2vertex_connected(g):
        edges, bound, adjusted = _georgiadis_edges(g, 0)
        return _finish(g, "2s", edges, bound, adjusted)
    edges, base_bound, adjusted = _saps_core(g)
    saps = sorted(strong_articulation_points(g))
    block_vertices: set[int] = set()
    if skip_blockless_sccs:
        for b in blocks_2s_dom(g):
            block_vertices.update(b)
    for v in saps:
        sub, kept = delete_vertices(g, {v})
        for cell in scc(sub).cells:
            orig = {kept[c] for c in cell}
            if len(orig) < 2:
                continue
            if skip_blockless_sccs and not (orig & block_vertices):
                continue
            if not _subset_strongly_connected(edges, orig):
                w = min(orig)
                edges |= _out_tree(g, orig, w) | _in_tree(g, orig, w)
    bound = base_bound + 2 * len(saps) * n
    return _finish(g, "2s", edges, bound, adjusted)


def mscss_same_2e(g: DiGraph) -> SpanningSolution:
    """Strongly connected spanning subgraph with the same 2-edge blocks."""
    require_strongly_connected(g, "mscss_same_2e")
    n = g.n
    if n == 1:
        return _finish(g, "2e", set(), 1, False)
    v = 0
    t1, t2 = edge_dominator_preserving_pair(FlowGraph(g, v))
    t3, t4 = edge_dominator_preserving_pair(FlowGraph(reverse(g), v))
    fwd = t1 | t2
    bwd = {(y, x) for x, y in t3 | t4}
    edges = fwd | bwd
    bridges = sorted(strong_bridges(g))
    for e in bridges:
        sub = delete_edges(g, {e})
        for cell in scc(sub).cells:
            if len(cell) < 2:
                continue
            orig = set(cell)
            if not _subset_strongly_connected(edges, orig):
                w = min(orig)
                edges |= _out_tree(g, orig, w) | _in_tree(g, orig, w)
    adjusted = len(fwd) > 2 * (n - 1) or len(bwd) > 2 * (n - 1)
    if adjusted:
        bound = len(fwd) + len(bwd) + 2 * len(bridges) * (n - 1) + 1
    else:
        bound = (4 + 2 * len(bridges)) * n
    return _finish(g, "2e", edges, bound, adjusted)


def mscss_same_2d(g: DiGraph) -> SpanningSolution:
    """Strongly connected spanning subgraph with the same 2-directed blocks:
    union of the 2s-preserving and 2e-preserving solutions."""
    require_strongly_connected(g, "mscss_same_2d")
    if g.n == 1:
        return _finish(g, "2d", set(), 1, False)
    s2s = mscss_same_2s(g)
    s2e = mscss_same_2e(g)
    edges = set(s2s.edges) | set(s2e.edges)
    bound = s2s.budget_bound + s2e.budget_bound
    return _finish(g, "2d", edges, bound,
                   s2s.budget_adjusted or s2e.budget_adjusted)
