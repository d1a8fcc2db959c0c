"""The 2-directed / 2-strong / 2-edge block decompositions.

Every family is computable by two independent routes:

* a dominator route: one flowgraph per root, reading off the root's
  dominator-tree children (or the vertices without edge dominators);
* an enumeration route: start from the all-pairs relation and knock out
  the pairs separated by deleting each strong articulation point (or each
  strong bridge).

Both routes build the same symmetric pair relation; 2d/2s families are the
biconnected blocks of its graph, 2e families its connected components.
Non-strongly-connected inputs are decomposed into SCCs first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .connectivity import (
    is_2edge_connected,
    is_2vertex_connected,
    strong_articulation_points,
    strong_bridges,
)
from .dominators import (
    _immediate_dominators,
    _split_all_arrays,
    _split_out_arrays,
    _unguarded_from_split,
)
from .graphs import (
    DiGraph,
    UndirectedGraph,
    biconnected_blocks,
    connected_components,
    delete_edges,
    delete_vertices,
    induced_subgraph,
    is_strongly_connected,
    require_strongly_connected,
    reverse,
    scc,
)


class PairRelation:
    """Symmetric boolean relation over vertex pairs, stored as bit rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: list[int]):
        self.n = n
        self.rows = rows

    @classmethod
    def from_directional(cls, n: int, rows: list[int]) -> "PairRelation":
        """Keep pair {v,w} iff both directional bits v->w and w->v are set."""
        sym = [0] * n
        for v in range(n):
            m = (rows[v] >> (v + 1)) << (v + 1)  # bits above the diagonal
            while m:
                low = m & -m
                w = low.bit_length() - 1
                if (rows[w] >> v) & 1:
                    sym[v] |= 1 << w
                    sym[w] |= 1 << v
                m ^= low
        return cls(n, sym)

    def has(self, v: int, w: int) -> bool:
        return v != w and bool((self.rows[v] >> w) & 1)

    def pairs(self) -> Iterable[tuple[int, int]]:
        for v in range(self.n):
            m = (self.rows[v] >> (v + 1)) << (v + 1)
            while m:
                low = m & -m
                yield (v, low.bit_length() - 1)
                m ^= low

    def neighbors(self, v: int) -> set[int]:
        out = set()
        m = self.rows[v]
        while m:
            low = m & -m
            out.add(low.bit_length() - 1)
            m ^= low
        return out

    def is_symmetric(self) -> bool:
        return all(
            ((self.rows[w] >> v) & 1) == ((self.rows[v] >> w) & 1)
            for v in range(self.n)
            for w in range(v + 1, self.n)
        )

    def to_undirected(self) -> UndirectedGraph:
        return UndirectedGraph(self.n, self.pairs())


@dataclass(frozen=True)
class BlockFamily:
    """A set of vertex sets of one block kind, canonically ordered."""

    kind: str
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, kind: str, sets: Iterable[Iterable[int]]) -> "BlockFamily":
        if kind not in ("2d", "2s", "2e"):
            raise ValueError(f"unknown block kind {kind!r}")
        fam = cls(kind, tuple(sorted(tuple(sorted(s)) for s in sets)))
        fam._check_structure()
        return fam

    def _check_structure(self):
        for b in self.blocks:
            if len(b) < 2:
                raise ValueError("blocks must have at least 2 vertices")
        membership: dict[int, list[int]] = {}
        for i, b in enumerate(self.blocks):
            for v in b:
                membership.setdefault(v, []).append(i)
        if self.kind == "2e":
            for v, ids in membership.items():
                if len(ids) > 1:
                    raise ValueError(f"2e blocks must be disjoint (vertex {v})")
            return
        counts: dict[tuple[int, int], int] = {}
        for ids in membership.values():
            for a in range(len(ids)):
                for b in range(a + 1, len(ids)):
                    key = (ids[a], ids[b])
                    counts[key] = counts.get(key, 0) + 1
                    if counts[key] > 1:
                        raise ValueError(
                            f"{self.kind} blocks may share at most one vertex"
                        )

    def containing(self, v: int) -> list[tuple[int, ...]]:
        return [b for b in self.blocks if v in b]

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)


@dataclass(frozen=True)
class BlockGraph2D:
    """Block-cut incidence structure of the 2d family; always a forest."""

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    incidences: tuple[tuple[int, int], ...]  # (block index, cut vertex)

    def node_count(self) -> int:
        return len(self.blocks) + len(self.cut_vertices)

    def is_forest(self) -> bool:
        parent: dict[object, object] = {}

        def find(x):
            while parent.get(x, x) != x:
                parent[x] = parent.get(parent[x], parent[x])
                x = parent[x]
            return x

        for i in range(len(self.blocks)):
            parent[("b", i)] = ("b", i)
        for v in self.cut_vertices:
            parent[("v", v)] = ("v", v)
        for i, v in self.incidences:
            a, b = find(("b", i)), find(("v", v))
            if a == b:
                return False
            parent[a] = b
        return True


# ---------------------------------------------------------------------------
# per-root target sets (the rows of the directional matrix)


def two_reach_targets(g: DiGraph, v: int) -> set[int]:
    """Vertices reachable from v by two vertex-disjoint paths.

    These are exactly the original vertices sitting directly below v in the
    dominator tree of the flowgraph whose out-edges at v have been split.
    """
    require_strongly_connected(g, "two_reach_targets")
    nv, succ, preds = _split_out_arrays(g, v)
    idom = _immediate_dominators(nv, succ, preds, v)
    return {w for w in range(g.n) if w != v and idom[w] == v}


def strong_reach_targets(g: DiGraph, v: int) -> set[int]:
    """Direct dominator-tree children of v in the flowgraph rooted at v."""
    require_strongly_connected(g, "strong_reach_targets")
    idom = _immediate_dominators(g.n, g.out, g.inn, v)
    return {w for w in range(g.n) if w != v and idom[w] == v}


def unguarded_targets(g: DiGraph, v: int) -> set[int]:
    """Vertices with no edge dominator in the flowgraph rooted at v."""
    require_strongly_connected(g, "unguarded_targets")
    nv, succ, preds = _split_all_arrays(g)
    return _unguarded_from_split(g, nv, succ, preds, v)


# ---------------------------------------------------------------------------
# relation builders (input must be strongly connected)


def relation_2d(g: DiGraph) -> PairRelation:
    """Pairs joined by two vertex-disjoint paths in both directions."""
    require_strongly_connected(g, "relation_2d")
    rows = []
    for v in range(g.n):
        nv, succ, preds = _split_out_arrays(g, v)
        idom = _immediate_dominators(nv, succ, preds, v)
        mask = 0
        for w in range(g.n):
            if w != v and idom[w] == v:
                mask |= 1 << w
        rows.append(mask)
    return PairRelation.from_directional(g.n, rows)


def relation_2s(g: DiGraph) -> PairRelation:
    """Pairs that stay together under every single-vertex deletion."""
    require_strongly_connected(g, "relation_2s")
    rows = []
    for v in range(g.n):
        idom = _immediate_dominators(g.n, g.out, g.inn, v)
        mask = 0
        for w in range(g.n):
            if w != v and idom[w] == v:
                mask |= 1 << w
        rows.append(mask)
    return PairRelation.from_directional(g.n, rows)


def relation_2e(g: DiGraph) -> PairRelation:
    """Pairs joined by two edge-disjoint paths in both directions."""
    require_strongly_connected(g, "relation_2e")
    nv, succ, preds = _split_all_arrays(g)
    rows = []
    for v in range(g.n):
        mask = 0
        for w in _unguarded_from_split(g, nv, succ, preds, v):
            mask |= 1 << w
        rows.append(mask)
    return PairRelation.from_directional(g.n, rows)


def _full_rows(n: int) -> list[int]:
    full = (1 << n) - 1
    return [full ^ (1 << v) for v in range(n)]


def _knock_out_vertex_separations(g: DiGraph, rows: list[int], seps) -> None:
    """Clear rows pairs split by deleting each separating vertex in ``seps``."""
    for s in sorted(seps):
        sub, kept = delete_vertices(g, {s})
        cells = scc(sub).cells
        if len(cells) < 2:
            continue
        masks = []
        union = 0
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << kept[v]
            masks.append(m)
            union |= m
        for m in masks:
            other = union ^ m
            mm = m
            while mm:
                low = mm & -mm
                rows[low.bit_length() - 1] &= ~other
                mm ^= low
    return None


def _knock_out_edge_separations(g: DiGraph, rows: list[int], bridges) -> None:
    """Clear rows pairs split by deleting each bridge edge."""
    for e in sorted(bridges):
        sub = delete_edges(g, {e})
        cells = scc(sub).cells
        if len(cells) < 2:
            continue
        full = (1 << g.n) - 1
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            other = full ^ m
            mm = m
            while mm:
                low = mm & -mm
                rows[low.bit_length() - 1] &= ~other
                mm ^= low
    return None


def relation_2s_by_saps(g: DiGraph) -> PairRelation:
    require_strongly_connected(g, "relation_2s_by_saps")
    rows = _full_rows(g.n)
    _knock_out_vertex_separations(g, rows, strong_articulation_points(g))
    return PairRelation(g.n, rows)


def relation_2e_by_bridges(g: DiGraph) -> PairRelation:
    require_strongly_connected(g, "relation_2e_by_bridges")
    rows = _full_rows(g.n)
    _knock_out_edge_separations(g, rows, strong_bridges(g))
    return PairRelation(g.n, rows)


def relation_2d_combined(g: DiGraph) -> PairRelation:
    """AND of the SAP-enumeration and bridge-enumeration relations."""
    require_strongly_connected(g, "relation_2d_combined")
    rows = _full_rows(g.n)
    _knock_out_vertex_separations(g, rows, strong_articulation_points(g))
    _knock_out_edge_separations(g, rows, strong_bridges(g))
    return PairRelation(g.n, rows)


# ---------------------------------------------------------------------------
# block families


def _relation_blocks(rel: PairRelation) -> list[set[int]]:
    return [set(b) for b in biconnected_blocks(rel.to_undirected())]


def _relation_components(rel: PairRelation) -> list[set[int]]:
    return [
        set(cell)
        for cell in connected_components(rel.to_undirected()).cells
        if len(cell) > 1
    ]


def _per_scc(g: DiGraph, solve: Callable[[DiGraph], list[set[int]]]) -> list[set[int]]:
    """Run a strongly-connected solver per SCC and translate ids back."""
    if g.n > 0 and is_strongly_connected(g):
        return solve(g)
    found: list[set[int]] = []
    for cell in scc(g).cells:
        if len(cell) < 2:
            continue
        sub, kept = induced_subgraph(g, cell)
        for b in solve(sub):
            found.append({kept[v] for v in b})
    return found


def blocks_2d_direct(g: DiGraph) -> BlockFamily:
    """2-directed blocks via per-root vertex-disjoint reach tests."""

    def solve(h: DiGraph) -> list[set[int]]:
        if is_2vertex_connected(h):
            return [set(range(h.n))]
        return _relation_blocks(relation_2d(h))

    return BlockFamily.build("2d", _per_scc(g, solve))


def blocks_2d_combined(g: DiGraph) -> BlockFamily:
    """2-directed blocks by intersecting the 2s and 2e enumeration relations."""

    def solve(h: DiGraph) -> list[set[int]]:
        if is_2vertex_connected(h):
            return [set(range(h.n))]
        return _relation_blocks(relation_2d_combined(h))

    return BlockFamily.build("2d", _per_scc(g, solve))


def blocks_2s_dom(g: DiGraph) -> BlockFamily:
    """2-strong blocks via per-root dominator trees."""

    def solve(h: DiGraph) -> list[set[int]]:
        if is_2vertex_connected(h):
            return [set(range(h.n))]
        return _relation_blocks(relation_2s(h))

    return BlockFamily.build("2s", _per_scc(g, solve))


def blocks_2s_sap(g: DiGraph) -> BlockFamily:
    """2-strong blocks by enumerating strong articulation points."""

    def solve(h: DiGraph) -> list[set[int]]:
        if is_2vertex_connected(h):
            return [set(range(h.n))]
        return _relation_blocks(relation_2s_by_saps(h))

    return BlockFamily.build("2s", _per_scc(g, solve))


def blocks_2e_dom(g: DiGraph) -> BlockFamily:
    """2-edge blocks via per-root edge-dominator absence."""

    def solve(h: DiGraph) -> list[set[int]]:
        if h.n >= 2 and is_2edge_connected(h):
            return [set(range(h.n))]
        return _relation_components(relation_2e(h))

    return BlockFamily.build("2e", _per_scc(g, solve))


def blocks_2e_bridge(g: DiGraph) -> BlockFamily:
    """2-edge blocks by enumerating strong bridges."""

    def solve(h: DiGraph) -> list[set[int]]:
        if h.n >= 2 and is_2edge_connected(h):
            return [set(range(h.n))]
        return _relation_components(relation_2e_by_bridges(h))

    return BlockFamily.build("2e", _per_scc(g, solve))


# ---------------------------------------------------------------------------
# per-vertex queries


def neighborhood_2d(g: DiGraph, v: int) -> set[int]:
    """All w two-vertex-disjoint-reachable from v in both directions."""
    require_strongly_connected(g, "neighborhood_2d")
    forward = two_reach_targets(g, v)
    backward = two_reach_targets(reverse(g), v)
    return forward & backward


def blocks_2d_at_vertex(g: DiGraph, v: int) -> list[set[int]]:
    """The 2-directed blocks containing v, without building the full relation.

    Peels the mutual-reach neighborhood of v: each peeled group, closed with
    v and the chosen witness, is one block.
    """
    require_strongly_connected(g, "blocks_2d_at_vertex")
    if is_2vertex_connected(g):
        return [set(range(g.n))]
    remaining = neighborhood_2d(g, v)
    found = []
    while remaining:
        w = min(remaining)
        shared = remaining & neighborhood_2d(g, w)
        found.append(shared | {v, w})
        remaining -= shared | {w}
    return sorted(found, key=lambda b: (min(b), sorted(b)))


def block_2e_at_vertex(g: DiGraph, v: int) -> set[int]:
    """The 2-edge block containing v, or the empty set."""
    require_strongly_connected(g, "block_2e_at_vertex")
    nv, succ, preds = _split_all_arrays(g)
    unguarded = _unguarded_from_split(g, nv, succ, preds, v)
    rg = reverse(g)
    nvr, succr, predsr = _split_all_arrays(rg)
    unguarded_rev = _unguarded_from_split(rg, nvr, succr, predsr, v)
    both = unguarded & unguarded_rev
    if not both:
        return set()
    return both | {v}


def block_graph_2d(g: DiGraph) -> BlockGraph2D:
    """Incidence forest between 2d blocks and their shared cut vertices."""
    family = blocks_2d_direct(g)
    membership: dict[int, list[int]] = {}
    for i, b in enumerate(family.blocks):
        for v in b:
            membership.setdefault(v, []).append(i)
    cuts = tuple(sorted(v for v, ids in membership.items() if len(ids) > 1))
    incidences = tuple(
        sorted((i, v) for v in cuts for i in membership[v])
    )
    bg = BlockGraph2D(family.blocks, cuts, incidences)
    assert bg.is_forest(), "2d block graph must be acyclic"
    return bg
