"""Shared fixtures and random-instance generators."""

from __future__ import annotations

import random

import pytest

from fragmap.graphs import GraphDatabase, LabeledGraph


def random_graph(
    rng: random.Random,
    max_vertices: int = 6,
    n_vertex_labels: int = 3,
    n_edge_labels: int = 2,
    max_edges: int = 7,
    connected: bool = False,
) -> LabeledGraph:
    """Random simple labeled graph; transactions may be disconnected."""
    n = rng.randint(1, max_vertices)
    labels = [rng.randrange(n_vertex_labels) for _ in range(n)]
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(possible)
    edges = []
    if connected and n > 1:
        # random spanning tree first
        order = list(range(n))
        rng.shuffle(order)
        for k in range(1, n):
            u = order[k]
            v = order[rng.randrange(k)]
            edges.append((min(u, v), max(u, v), rng.randrange(n_edge_labels)))
        present = {(u, v) for u, v, _ in edges}
        possible = [p for p in possible if p not in present]
    budget = max(0, rng.randint(0, max_edges) - len(edges))
    for u, v in possible[:budget]:
        edges.append((u, v, rng.randrange(n_edge_labels)))
    return LabeledGraph(labels, edges)


def random_database(
    rng: random.Random,
    max_transactions: int = 8,
    max_vertices: int = 6,
    n_vertex_labels: int = 3,
    n_edge_labels: int = 2,
    max_edges: int = 7,
) -> GraphDatabase:
    n = rng.randint(1, max_transactions)
    return GraphDatabase(
        [
            random_graph(rng, max_vertices, n_vertex_labels, n_edge_labels, max_edges)
            for _ in range(n)
        ]
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xF4A6)
