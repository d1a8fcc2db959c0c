"""Brute-force definitional oracles for the pair relations, block families,
strong articulation points, and strong bridges.

Everything here works by deleting vertices or edges and recounting SCCs,
or by exhaustively enumerating simple paths. These routines are test-only
ground truth and carry hard size guards.
"""

from __future__ import annotations

from .errors import GraphInputError, OracleSizeError
from .graphs import (
    DiGraph,
    delete_edges,
    delete_vertices,
    induced_subgraph,
    is_strongly_connected,
    require_strongly_connected,
    scc,
)

MAX_CLIQUE_N = 12
MAX_PATH_N = 8


def _co_scc_without_vertex(g: DiGraph, x: int, y: int, w: int) -> bool:
    sub, kept = delete_vertices(g, {w})
    pos = {old: new for new, old in enumerate(kept)}
    return scc(sub).same_cell(pos[x], pos[y])


def _co_scc_without_edges(g: DiGraph, x: int, y: int, edges) -> bool:
    present = {e for e in edges if g.has_edge(*e)}
    return scc(delete_edges(g, present)).same_cell(x, y)


def _check_pair(g: DiGraph, x: int, y: int) -> None:
    if x == y:
        raise GraphInputError("pair oracle needs two distinct vertices")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise GraphInputError(f"vertex pair ({x},{y}) out of range")


def oracle_2d_pair(g: DiGraph, x: int, y: int) -> bool:
    """Two vertex-disjoint paths each way: survives every single-vertex
    deletion and the deletion of the direct edges between x and y."""
    _check_pair(g, x, y)
    require_strongly_connected(g, "oracle_2d_pair")
    for w in range(g.n):
        if w != x and w != y and not _co_scc_without_vertex(g, x, y, w):
            return False
    return _co_scc_without_edges(g, x, y, [(x, y), (y, x)])


def oracle_2s_pair(g: DiGraph, x: int, y: int) -> bool:
    """Co-SCC under every deletion of a single other vertex."""
    _check_pair(g, x, y)
    require_strongly_connected(g, "oracle_2s_pair")
    return all(
        _co_scc_without_vertex(g, x, y, w)
        for w in range(g.n)
        if w != x and w != y
    )


def oracle_2e_pair(g: DiGraph, x: int, y: int) -> bool:
    """Co-SCC under every single-edge deletion."""
    _check_pair(g, x, y)
    require_strongly_connected(g, "oracle_2e_pair")
    return all(_co_scc_without_edges(g, x, y, [e]) for e in g.edges)


_PAIR_ORACLES = {
    "2d": oracle_2d_pair,
    "2s": oracle_2s_pair,
    "2e": oracle_2e_pair,
}


def _maximal_cliques(n: int, adj: list[set[int]]):
    """Bron-Kerbosch with pivoting over an adjacency-set graph."""
    cliques: list[set[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]):
        if not p and not x:
            if r:
                cliques.append(set(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(n)), set())
    return cliques


def oracle_blocks(g: DiGraph, kind: str) -> "BlockFamily":
    """Maximal vertex sets of size >= 2 pairwise closed under the kind's
    relation, by exhaustive maximal-clique enumeration."""
    from .blocks import BlockFamily

    if kind not in _PAIR_ORACLES:
        raise GraphInputError(f"unknown block kind {kind!r}")
    if g.n > MAX_CLIQUE_N:
        raise OracleSizeError(
            f"oracle_blocks limited to n <= {MAX_CLIQUE_N}, got {g.n}"
        )
    pair = _PAIR_ORACLES[kind]
    found: list[set[int]] = []
    for cell in scc(g).cells:
        if len(cell) < 2:
            continue
        sub, kept = induced_subgraph(g, cell)
        adj: list[set[int]] = [set() for _ in range(sub.n)]
        for x in range(sub.n):
            for y in range(x + 1, sub.n):
                if pair(sub, x, y):
                    adj[x].add(y)
                    adj[y].add(x)
        for clique in _maximal_cliques(sub.n, adj):
            if len(clique) >= 2:
                found.append({kept[v] for v in clique})
    return BlockFamily.build(kind, found)


def oracle_saps(g: DiGraph) -> set[int]:
    """Vertices whose deletion leaves a non-strongly-connected remainder."""
    require_strongly_connected(g, "oracle_saps")
    result = set()
    for v in range(g.n):
        sub, _ = delete_vertices(g, {v})
        if sub.n >= 1 and not is_strongly_connected(sub):
            result.add(v)
    return result


def oracle_bridges(g: DiGraph) -> set[tuple[int, int]]:
    """Edges whose deletion disconnects the graph."""
    require_strongly_connected(g, "oracle_bridges")
    return {
        e for e in g.edges if not is_strongly_connected(delete_edges(g, {e}))
    }


def _simple_paths(g: DiGraph, x: int, y: int) -> list[tuple[int, ...]]:
    paths: list[tuple[int, ...]] = []
    stack: list[tuple[int, tuple[int, ...]]] = [(x, (x,))]
    while stack:
        v, path = stack.pop()
        for w in g.out[v]:
            if w == y:
                paths.append(path + (y,))
            elif w not in path:
                stack.append((w, path + (w,)))
    return paths


def _two_disjoint_paths(g: DiGraph, x: int, y: int) -> bool:
    paths = _simple_paths(g, x, y)
    ends = {x, y}
    for i in range(len(paths)):
        pi = set(paths[i])
        for j in range(i + 1, len(paths)):
            if pi & set(paths[j]) == ends:
                return True
    return False


def pathwise_2d_pair(g: DiGraph, x: int, y: int) -> bool:
    """Raw two-vertex-disjoint-paths-both-ways statement by exhaustive
    simple-path enumeration; cross-validates oracle_2d_pair."""
    _check_pair(g, x, y)
    if g.n > MAX_PATH_N:
        raise OracleSizeError(
            f"pathwise_2d_pair limited to n <= {MAX_PATH_N}, got {g.n}"
        )
    return _two_disjoint_paths(g, x, y) and _two_disjoint_paths(g, y, x)
