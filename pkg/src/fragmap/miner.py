"""Frequent connected-subgraph mining.

A correctness-first level-wise miner: grow patterns one edge at a time,
deduplicate candidates by canonical code, and count support by subgraph
isomorphism against the transactions where the parent already occurs.
Lattice roots are the frequent single-vertex patterns; every pattern of k+1
edges is linked to each of its frequent k-edge generalizations.
"""

from __future__ import annotations

from .errors import FormatError
from .graphs import GraphDatabase, LabeledGraph, canonical_code, subgraph_isomorphic
from .lattice import Lattice
from .occurrence import OccurrenceSet, OccurrenceStore


def mine(db: GraphDatabase, minsupp: int) -> Lattice:
    """Mine all connected subgraphs occurring in at least ``minsupp``
    transactions (occurrence is boolean per transaction).

    Returns the full lattice: patterns with supports and occurrence sets,
    plus every parent->child one-edge-extension link between them.
    """
    if minsupp < 1:
        raise FormatError("minsupp must be a positive integer")
    if len(db) == 0:
        raise FormatError("graph database is empty")

    # label vocabulary actually present, for candidate pruning
    vertex_occ: dict[int, set[int]] = {}
    triples: set[tuple[int, int, int]] = set()  # (vlabel, elabel, vlabel) both ways
    for tid, g in enumerate(db.transactions):
        for vl in g.vertex_labels:
            vertex_occ.setdefault(vl, set()).add(tid)
        for u, v, el in g.edges:
            lu, lv = g.vertex_labels[u], g.vertex_labels[v]
            triples.add((lu, el, lv))
            triples.add((lv, el, lu))

    found: dict[bytes, tuple[LabeledGraph, frozenset[int]]] = {}
    level: dict[bytes, tuple[LabeledGraph, frozenset[int]]] = {}
    for vl in sorted(vertex_occ):
        occ = frozenset(vertex_occ[vl])
        if len(occ) >= minsupp:
            g = LabeledGraph([vl], [])
            level[canonical_code(g)] = (g, occ)
    found.update(level)

    while level:
        next_level: dict[bytes, tuple[LabeledGraph, frozenset[int]]] = {}
        for code in sorted(level):
            graph, occ = level[code]
            for cand in _extensions(graph, triples):
                cand_code = canonical_code(cand)
                if cand_code in found or cand_code in next_level:
                    continue
                cand_occ = frozenset(
                    tid for tid in occ if subgraph_isomorphic(cand, db[tid])
                )
                if len(cand_occ) >= minsupp:
                    next_level[cand_code] = (cand, cand_occ)
        found.update(next_level)
        level = next_level

    # deterministic ids: (vertex count, canonical code)
    ordered = sorted(found.items(), key=lambda kv: (kv[1][0].vertex_count, kv[0]))
    ids = {code: pid for pid, (code, _) in enumerate(ordered)}

    patterns = {ids[code]: g for code, (g, _) in found.items()}
    supports = {ids[code]: len(occ) for code, (_, occ) in found.items()}
    store = OccurrenceStore(len(db))
    for code, (_, occ) in found.items():
        store.add(ids[code], OccurrenceSet.from_indices(occ, len(db)))

    edges = set()
    for code, (g, _) in found.items():
        for parent in _generalizations(g):
            parent_code = canonical_code(parent)
            # anti-monotonicity: every generalization of a frequent pattern is frequent
            assert parent_code in ids, "missing frequent parent"
            edges.add((ids[parent_code], ids[code]))

    return Lattice(minsupp, patterns, supports, store, edges, validate=False)


def _extensions(g: LabeledGraph, triples: set[tuple[int, int, int]]):
    """Candidate one-edge extensions, restricted to label triples in the db."""
    n = g.vertex_count
    labels = g.vertex_labels
    elabels_between: dict[tuple[int, int], set[int]] = {}
    new_neighbors: dict[int, set[tuple[int, int]]] = {}
    for la, el, lb in triples:
        elabels_between.setdefault((la, lb), set()).add(el)
        new_neighbors.setdefault(la, set()).add((el, lb))
    # close a cycle between existing vertices
    for u in range(n):
        for v in range(u + 1, n):
            if g.edge_label(u, v) is not None:
                continue
            for el in sorted(elabels_between.get((labels[u], labels[v]), ())):
                yield LabeledGraph(labels, g.edges + ((u, v, el),))
    # attach a new vertex
    for u in range(n):
        for el, lb in sorted(new_neighbors.get(labels[u], ())):
            yield LabeledGraph(labels + (lb,), g.edges + ((u, n, el),))


def _generalizations(g: LabeledGraph):
    """Connected graphs obtained by deleting one edge (dropping a vertex it
    isolates); for a single-edge pattern these are its endpoint vertices."""
    if g.edge_count == 0:
        return
    if g.edge_count == 1:
        u, v, _ = g.edges[0]
        seen = set()
        for w in (u, v):
            if g.vertex_labels[w] not in seen:
                seen.add(g.vertex_labels[w])
                yield LabeledGraph([g.vertex_labels[w]], [])
        return
    for k, (u, v, _) in enumerate(g.edges):
        remaining = g.edges[:k] + g.edges[k + 1:]
        degree = {w: 0 for w in range(g.vertex_count)}
        for a, b, _ in remaining:
            degree[a] += 1
            degree[b] += 1
        drop = [w for w in (u, v) if degree[w] == 0]
        if len(drop) > 1:
            continue  # cannot happen for connected g with >= 2 edges
        if drop:
            keep = [w for w in range(g.vertex_count) if w != drop[0]]
            remap = {w: i for i, w in enumerate(keep)}
            parent = LabeledGraph(
                [g.vertex_labels[w] for w in keep],
                [(remap[a], remap[b], el) for a, b, el in remaining],
            )
        else:
            parent = LabeledGraph(g.vertex_labels, remaining)
        if parent.is_connected():
            yield parent
