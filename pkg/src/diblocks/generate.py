"""Deterministic random strongly connected fixtures."""

from __future__ import annotations

import random

from .errors import GraphInputError
from .graphs import DiGraph


def random_strongly_connected(n: int, m: int, seed: int) -> DiGraph:
    """Random strongly connected digraph: a random backbone cycle through
    all vertices plus random extra edges, deterministic per seed."""
    if n < 2:
        raise GraphInputError("need n >= 2 for a strongly connected fixture")
    if m < n:
        raise GraphInputError(f"need m >= n to close a backbone cycle, got m={m}")
    if m > n * (n - 1):
        raise GraphInputError(f"m={m} exceeds the simple-graph maximum {n * (n - 1)}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = {
        (order[i], order[(i + 1) % n]) for i in range(n)
    }
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            edges.add((u, v))
    return DiGraph(n, edges)
