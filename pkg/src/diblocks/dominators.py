"""Dominator trees, edge dominators via edge splitting, and sparse
dominator-preserving spanning-tree pairs.

The immediate-dominator core is the simple Lengauer-Tarjan algorithm
(path compression, no balancing) over array adjacency, iterative
throughout so large flowgraphs do not hit the recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphInputError
from .graphs import DiGraph

Edge = tuple[int, int]


@dataclass(frozen=True)
class FlowGraph:
    """A directed graph with a root that reaches every vertex."""

    graph: DiGraph
    root: int

    def __post_init__(self):
        g, r = self.graph, self.root
        if not (0 <= r < g.n):
            raise GraphInputError(f"root {r} out of range for n={g.n}")
        seen = bytearray(g.n)
        seen[r] = 1
        frontier = [r]
        count = 1
        while frontier:
            v = frontier.pop()
            for w in g.out[v]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    frontier.append(w)
        if count != g.n:
            missing = next(v for v in range(g.n) if not seen[v])
            raise GraphInputError(
                f"vertex {missing} not reachable from root {r}"
            )


@dataclass(frozen=True)
class DominatorTree:
    """Immediate-dominator map of a flowgraph; idom covers every non-root vertex."""

    root: int
    idom: dict[int, int]

    def children_map(self) -> dict[int, list[int]]:
        children: dict[int, list[int]] = {}
        for w in sorted(self.idom):
            children.setdefault(self.idom[w], []).append(w)
        return children

    def children_of(self, v: int) -> set[int]:
        return {w for w, u in self.idom.items() if u == v}

    def ancestors(self, w: int):
        """Proper dominators of w, deepest first, ending at the root."""
        while w != self.root:
            w = self.idom[w]
            yield w


@dataclass(frozen=True)
class EdgeSplitGraph:
    """A graph with some edges (x,y) replaced by (x,aux),(aux,y)."""

    base: DiGraph
    split: DiGraph
    phi: dict[Edge, int] = field(compare=False)

    def is_original(self, v: int) -> bool:
        return v < self.base.n


def _immediate_dominators(nv: int, succ, preds, root: int) -> list[int]:
    """Lengauer-Tarjan idom array: idom[root] == root, -1 for unreachable."""
    pre = [-1] * nv
    verts: list[int] = []
    parent = [-1] * nv
    stack = [(root, -1)]
    while stack:
        v, p = stack.pop()
        if pre[v] != -1:
            continue
        pre[v] = len(verts)
        verts.append(v)
        parent[v] = p
        for w in reversed(succ[v]):
            if pre[w] == -1:
                stack.append((w, v))
    nreach = len(verts)
    idom = [-1] * nv
    idom[root] = root
    if nreach <= 1:
        return idom

    semi = pre[:]  # semi-dominator as a dfs number
    ancestor = [-1] * nv
    label = list(range(nv))
    buckets: list[list[int]] = [[] for _ in range(nv)]

    def evaluate(v: int) -> int:
        a = ancestor[v]
        if a == -1:
            return v
        chain = []
        x = v
        while ancestor[a] != -1:
            chain.append(x)
            x = a
            a = ancestor[a]
        for x in reversed(chain):
            ax = ancestor[x]
            if semi[label[ax]] < semi[label[x]]:
                label[x] = label[ax]
            ancestor[x] = ancestor[ax]
        return label[v]

    for i in range(nreach - 1, 0, -1):
        w = verts[i]
        sw = semi[w]
        for u in preds[w]:
            if pre[u] == -1:
                continue
            su = semi[evaluate(u)]
            if su < sw:
                sw = su
        semi[w] = sw
        buckets[verts[sw]].append(w)
        p = parent[w]
        ancestor[w] = p
        held = buckets[p]
        if held:
            for u in held:
                cand = evaluate(u)
                idom[u] = cand if semi[cand] < semi[u] else p
            buckets[p] = []
    for i in range(1, nreach):
        w = verts[i]
        if idom[w] != verts[semi[w]]:
            idom[w] = idom[idom[w]]
    return idom


def _idoms_of(g: DiGraph, root: int) -> list[int]:
    return _immediate_dominators(g.n, g.out, g.inn, root)


def dominator_tree(f: FlowGraph) -> DominatorTree:
    """Dominator tree of the flowgraph; every non-root vertex has an idom."""
    arr = _idoms_of(f.graph, f.root)
    return DominatorTree(
        root=f.root,
        idom={w: arr[w] for w in range(f.graph.n) if w != f.root},
    )


def nontrivial_dominators(t: DominatorTree) -> set[int]:
    """Non-root vertices that dominate at least one other vertex."""
    return {u for u in t.idom.values() if u != t.root}


def edge_split_all(g: DiGraph) -> EdgeSplitGraph:
    """Replace every edge (x,y) by (x,aux),(aux,y); aux ids follow edge order."""
    nv = g.n + g.m
    phi: dict[Edge, int] = {}
    split_edges = []
    for i, (x, y) in enumerate(g.edges):
        a = g.n + i
        phi[(x, y)] = a
        split_edges.append((x, a))
        split_edges.append((a, y))
    return EdgeSplitGraph(base=g, split=DiGraph(nv, split_edges), phi=phi)


def edge_split_out(g: DiGraph, v: int) -> EdgeSplitGraph:
    """Split only the edges leaving v; all other edges are kept as-is."""
    if not (0 <= v < g.n):
        raise GraphInputError(f"vertex {v} out of range for n={g.n}")
    phi: dict[Edge, int] = {}
    edges = []
    aux = g.n
    for x, y in g.edges:
        if x == v:
            phi[(x, y)] = aux
            edges.append((x, aux))
            edges.append((aux, y))
            aux += 1
        else:
            edges.append((x, y))
    return EdgeSplitGraph(base=g, split=DiGraph(aux, edges), phi=phi)


def _split_all_arrays(g: DiGraph) -> tuple[int, list[list[int]], list[list[int]]]:
    """(vertex count, succ, preds) of the fully split graph, skipping DiGraph
    construction; reused across the per-root loops of the block algorithms."""
    nv = g.n + g.m
    succ: list[list[int]] = [[] for _ in range(nv)]
    preds: list[list[int]] = [[] for _ in range(nv)]
    for i, (x, y) in enumerate(g.edges):
        a = g.n + i
        succ[x].append(a)
        succ[a].append(y)
        preds[a].append(x)
        preds[y].append(a)
    return nv, succ, preds


def _split_out_arrays(g: DiGraph, v: int) -> tuple[int, list[list[int]], list[list[int]]]:
    nv = g.n
    succ: list[list[int]] = [list(adj) for adj in g.out]
    preds: list[list[int]] = [list(adj) for adj in g.inn]
    succ[v] = []
    for y in g.out[v]:
        a = nv
        nv += 1
        succ.append([y])
        preds.append([v])
        succ[v].append(a)
        preds[y] = [a if u == v else u for u in preds[y]]
    return nv, succ, preds


def _unguarded_from_split(
    g: DiGraph, nv: int, succ, preds, root: int
) -> set[int]:
    """Original vertices with no auxiliary ancestor in the split dominator tree."""
    idom = _immediate_dominators(nv, succ, preds, root)
    n_orig = g.n
    # 0 unknown, 1 idom chain free of auxiliaries, 2 chain hits an auxiliary
    state = bytearray(nv)
    state[root] = 1
    result = set()
    for w0 in range(n_orig):
        if w0 == root or idom[w0] == -1:
            continue
        chain = []
        w = w0
        while state[w] == 0:
            chain.append(w)
            w = idom[w]
        for x in reversed(chain):
            p = idom[x]
            state[x] = 2 if (p >= n_orig or state[p] == 2) else 1
        if state[w0] == 1:
            result.add(w0)
    return result


def unguarded_vertices(f: FlowGraph) -> set[int]:
    """Vertices (other than the root) that have no edge dominator."""
    g = f.graph
    nv, succ, preds = _split_all_arrays(g)
    return _unguarded_from_split(g, nv, succ, preds, f.root)


def edge_dominators(f: FlowGraph) -> set[Edge]:
    """Edges that every root-to-somewhere path is forced through.

    An edge e=(x,y) dominates some vertex exactly when the auxiliary vertex
    of e is the immediate dominator of y in the fully split flowgraph.
    """
    g = f.graph
    nv, succ, preds = _split_all_arrays(g)
    idom = _immediate_dominators(nv, succ, preds, f.root)
    doms = set()
    for i, (x, y) in enumerate(g.edges):
        if idom[y] == g.n + i:
            doms.add((x, y))
    return doms


def _bfs_parents(g: DiGraph, root: int) -> tuple[list[int], list[int]]:
    """(parent, dist) of a BFS tree from root; parent[root] == -1."""
    parent = [-1] * g.n
    dist = [-1] * g.n
    dist[root] = 0
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for w in g.out[v]:
            if dist[w] == -1:
                dist[w] = dist[v] + 1
                parent[w] = v
                queue.append(w)
    return parent, dist


def _two_bfs_trees(g: DiGraph, root: int) -> tuple[set[Edge], set[Edge]]:
    """Two spanning trees; the second avoids the first tree's parent edges
    whenever the vertex has another predecessor one BFS level up."""
    parent1, dist = _bfs_parents(g, root)
    t1 = {(parent1[w], w) for w in range(g.n) if w != root}
    t2 = set()
    for w in range(g.n):
        if w == root:
            continue
        choice = -1
        for u in sorted(g.inn[w]):
            if dist[u] == dist[w] - 1 and u != parent1[w]:
                choice = u
                break
        if choice == -1:
            choice = parent1[w]
        t2.add((choice, w))
    return t1, t2


def _first_missing_edge_on_path(
    g: DiGraph,
    root: int,
    target: int,
    have: set[Edge],
    skip_vertex: int = -1,
    skip_edge: Edge | None = None,
) -> Edge:
    """First edge absent from ``have`` on some root->target path that avoids
    the given vertex or edge. The caller guarantees such a path exists."""
    prev: dict[int, Edge] = {}
    seen = bytearray(g.n)
    seen[root] = 1
    if skip_vertex >= 0:
        seen[skip_vertex] = 1
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        if v == target:
            break
        for w in g.out[v]:
            if not seen[w] and (v, w) != skip_edge:
                seen[w] = 1
                prev[w] = (v, w)
                queue.append(w)
    if not seen[target] and target != root:
        raise AssertionError("repair path must exist")
    path = []
    v = target
    while v != root:
        e = prev[v]
        path.append(e)
        v = e[0]
    for e in reversed(path):
        if e not in have:
            return e
    raise AssertionError("union already contains a full path; nothing spurious")


def dominator_preserving_pair(f: FlowGraph) -> tuple[set[Edge], set[Edge]]:
    """Two spanning edge sets whose union has the same non-trivial dominators
    as the input flowgraph.

    T1 is a BFS tree. T2 starts as a second tree biased away from T1's parent
    choices, then a repair loop adds original edges until no spurious
    non-trivial dominator remains. T2 may therefore exceed n-1 edges; callers
    should report |T1 u T2| rather than assume 2(n-1).
    """
    g, root = f.graph, f.root
    t1, t2 = _two_bfs_trees(g, root)
    want = nontrivial_dominators(dominator_tree(f))
    while True:
        union = DiGraph(g.n, t1 | t2)
        tree = dominator_tree(FlowGraph(union, root))
        spurious = nontrivial_dominators(tree) - want
        if not spurious:
            return t1, t2
        u = min(spurious)
        w = min(tree.children_of(u))
        t2.add(_first_missing_edge_on_path(g, root, w, t1 | t2, skip_vertex=u))


def edge_dominator_preserving_pair(f: FlowGraph) -> tuple[set[Edge], set[Edge]]:
    """Like dominator_preserving_pair, but the union keeps exactly the input
    flowgraph's edge dominators."""
    g, root = f.graph, f.root
    t1, t2 = _two_bfs_trees(g, root)
    want = edge_dominators(f)
    while True:
        union = DiGraph(g.n, t1 | t2)
        extra = edge_dominators(FlowGraph(union, root)) - want
        if not extra:
            return t1, t2
        e = min(extra)
        t2.add(
            _first_missing_edge_on_path(g, root, e[1], t1 | t2, skip_edge=e)
        )
