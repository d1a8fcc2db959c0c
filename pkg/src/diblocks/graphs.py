"""Directed and undirected graph types plus the baseline decompositions.

Vertices are dense ids 0..n-1. Graphs are simple (no self-loops, no
duplicate edges) and immutable after construction; every operation returns
a new graph.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import GraphInputError, NotStronglyConnectedError


class DiGraph:
    """Simple directed graph over dense vertex ids.

    Edges are canonicalized: duplicates dropped, order sorted by
    (source, target). Self-loops and out-of-range endpoints are rejected.
    """

    __slots__ = ("n", "edges", "out", "inn", "_edge_set")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for u, v in pairs:
            if u == v:
                raise GraphInputError(f"self-loop ({u},{v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
            seen.add((u, v))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            out[u].append(v)
            inn[v].append(u)
        self.out = out
        self.inn = inn
        self._edge_set = seen

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"DiGraph(n={self.n}, m={self.m})"


class UndirectedGraph:
    """Simple undirected graph; each edge stored once as (min, max)."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for u, v in pairs:
            if u == v:
                raise GraphInputError(f"self-loop ({u},{v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
            seen.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = adj

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={self.m})"


class Partition:
    """Disjoint vertex sets covering 0..n-1, in canonical order."""

    __slots__ = ("n", "cells", "cell_index")

    def __init__(self, n: int, cells: Iterable[Iterable[int]]):
        norm = sorted(tuple(sorted(c)) for c in cells)
        index = [-1] * n
        count = 0
        for i, cell in enumerate(norm):
            for v in cell:
                if not (0 <= v < n) or index[v] != -1:
                    raise GraphInputError("cells must disjointly cover 0..n-1")
                index[v] = i
            count += len(cell)
        if count != n:
            raise GraphInputError("cells must disjointly cover 0..n-1")
        self.n = n
        self.cells: tuple[tuple[int, ...], ...] = tuple(norm)
        self.cell_index = index

    def cell_of(self, v: int) -> tuple[int, ...]:
        return self.cells[self.cell_index[v]]

    def same_cell(self, u: int, v: int) -> bool:
        return self.cell_index[u] == self.cell_index[v]

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.n == other.n and self.cells == other.cells

    def __repr__(self) -> str:
        return f"Partition({len(self.cells)} cells over {self.n} vertices)"


def from_edge_list(n: int, pairs: Sequence[tuple[int, int]]) -> DiGraph:
    """Build a DiGraph, deduplicating edges and validating endpoints."""
    return DiGraph(n, pairs)


def reverse(g: DiGraph) -> DiGraph:
    """Graph with every edge flipped."""
    return DiGraph(g.n, ((v, u) for u, v in g.edges))


def delete_vertices(g: DiGraph, s: Iterable[int]) -> tuple[DiGraph, list[int]]:
    """Induced subgraph on the complement of ``s``.

    Returns (subgraph, kept) where kept[new_id] == old_id, so callers can
    translate results back to the original ids.
    """
    drop = set(s)
    for v in drop:
        if not (0 <= v < g.n):
            raise GraphInputError(f"vertex {v} out of range for n={g.n}")
    kept = [v for v in range(g.n) if v not in drop]
    new_id = {old: i for i, old in enumerate(kept)}
    edges = [
        (new_id[u], new_id[v])
        for u, v in g.edges
        if u not in drop and v not in drop
    ]
    return DiGraph(len(kept), edges), kept


def induced_subgraph(g: DiGraph, keep: Iterable[int]) -> tuple[DiGraph, list[int]]:
    """Induced subgraph on ``keep``; same remap convention as delete_vertices."""
    keep_set = set(keep)
    return delete_vertices(g, (v for v in range(g.n) if v not in keep_set))


def delete_edges(g: DiGraph, f: Iterable[tuple[int, int]]) -> DiGraph:
    """Same vertex set, edges minus ``f``."""
    drop = set(f)
    for e in drop:
        if not g.has_edge(*e):
            raise GraphInputError(f"edge {e} not present")
    return DiGraph(g.n, (e for e in g.edges if e not in drop))


def scc(g: DiGraph) -> Partition:
    """Strongly connected components (iterative Tarjan)."""
    n = g.n
    out = g.out
    index = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    cells: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        # frame: (vertex, iterator position over out[vertex])
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            recursed = False
            adjacency = out[v]
            for i in range(pi, len(adjacency)):
                w = adjacency[i]
                if index[w] == -1:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    recursed = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if recursed:
                continue
            if low[v] == index[v]:
                cell = []
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    cell.append(w)
                    if w == v:
                        break
                cells.append(cell)
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
    return Partition(n, cells)


def is_strongly_connected(g: DiGraph) -> bool:
    return g.n >= 1 and len(scc(g)) == 1


def require_strongly_connected(g: DiGraph, what: str) -> None:
    if not is_strongly_connected(g):
        raise NotStronglyConnectedError(f"{what} requires a strongly connected graph")


def connected_components(u: UndirectedGraph) -> Partition:
    """Connected components of an undirected graph."""
    seen = bytearray(u.n)
    cells = []
    for root in range(u.n):
        if seen[root]:
            continue
        seen[root] = 1
        cell = [root]
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for w in u.adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    cell.append(w)
                    frontier.append(w)
        cells.append(cell)
    return Partition(u.n, cells)


def biconnected_blocks(u: UndirectedGraph) -> list[set[int]]:
    """Vertex sets of the blocks of size > 1, in canonical order.

    A block is a maximal connected subgraph without articulation points;
    bridge edges show up as 2-sets. Isolated vertices are not reported.
    Iterative Hopcroft-Tarjan.
    """
    n = u.n
    adj = u.adj
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[set[int]] = []
    counter = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        work: list[tuple[int, int, int]] = [(root, -1, 0)]
        while work:
            v, parent, pi = work.pop()
            if pi == 0:
                disc[v] = low[v] = counter
                counter += 1
            recursed = False
            adjacency = adj[v]
            for i in range(pi, len(adjacency)):
                w = adjacency[i]
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    work.append((v, parent, i + 1))
                    work.append((w, v, 0))
                    recursed = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if recursed:
                continue
            if work:
                pv = work[-1][0]
                if low[v] < low[pv]:
                    low[pv] = low[v]
                if low[v] >= disc[pv]:
                    # pv closes a block; pop edges down to (pv, v)
                    members: set[int] = set()
                    while True:
                        e = edge_stack.pop()
                        members.add(e[0])
                        members.add(e[1])
                        if e == (pv, v):
                            break
                    blocks.append(members)
    return sorted(blocks, key=lambda b: (min(b), sorted(b)))
