"""Independent brute-force oracles the implementation is checked against.

Everything here is deliberately naive: exhaustive mappings for isomorphism,
permutation-minimal canonical forms, full enumeration of connected subgraphs
for mining, and a from-scratch re-run of the grouping loop. None of it
shares code paths with the package under test beyond the data types.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from fragmap.graphs import LabeledGraph


def edge_set(g: LabeledGraph) -> set[tuple[int, int, int]]:
    return set(g.edges)


def exhaustive_subgraph_iso(pattern: LabeledGraph, host: LabeledGraph) -> bool:
    """Try every injective vertex mapping."""
    pn, hn = pattern.vertex_count, host.vertex_count
    if pn > hn:
        return False
    host_edges = {}
    for u, v, el in host.edges:
        host_edges[(u, v)] = el
        host_edges[(v, u)] = el
    for image in itertools.permutations(range(hn), pn):
        if any(
            pattern.vertex_labels[k] != host.vertex_labels[image[k]] for k in range(pn)
        ):
            continue
        ok = True
        for u, v, el in pattern.edges:
            if host_edges.get((image[u], image[v])) != el:
                ok = False
                break
        if ok:
            return True
    return False


def label_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    """Exhaustively search for a label-preserving bijection."""
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.vertex_labels) != sorted(g2.vertex_labels):
        return False
    e2 = edge_set(g2)
    for perm in itertools.permutations(range(g2.vertex_count)):
        if any(
            g1.vertex_labels[k] != g2.vertex_labels[perm[k]]
            for k in range(g1.vertex_count)
        ):
            continue
        mapped = set()
        for u, v, el in g1.edges:
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            mapped.add((a, b, el))
        if mapped == e2:
            return True
    return False


def perm_canonical(g: LabeledGraph):
    """Canonical form: vertices sorted by label, then the minimal edge list
    over all within-label-class orderings."""
    n = g.vertex_count
    order = sorted(range(n), key=lambda v: g.vertex_labels[v])
    labels = tuple(g.vertex_labels[v] for v in order)
    # group positions by label so permutations stay label-preserving
    classes = []
    start = 0
    for k in range(1, n + 1):
        if k == n or labels[k] != labels[start]:
            classes.append(list(range(start, k)))
            start = k
    best = None
    for placements in itertools.product(*(itertools.permutations(c) for c in classes)):
        position = {}
        for cls, perm in zip(classes, placements):
            for slot, who in zip(cls, perm):
                position[order[who]] = slot
        edges = []
        for u, v, el in g.edges:
            a, b = position[u], position[v]
            if a > b:
                a, b = b, a
            edges.append((a, b, el))
        edges = tuple(sorted(edges))
        if best is None or edges < best:
            best = edges
    return (n, labels, best)


def connected_subgraphs(g: LabeledGraph):
    """Every connected subgraph: single vertices plus each connected edge
    subset (general subgraphs, not induced)."""
    for vl in g.vertex_labels:
        yield LabeledGraph([vl], [])
    m = g.edge_count
    for mask in range(1, 1 << m):
        chosen = [g.edges[k] for k in range(m) if mask >> k & 1]
        vertices = sorted({w for u, v, _ in chosen for w in (u, v)})
        remap = {w: i for i, w in enumerate(vertices)}
        sub = LabeledGraph(
            [g.vertex_labels[w] for w in vertices],
            [(remap[u], remap[v], el) for u, v, el in chosen],
        )
        if sub.is_connected():
            yield sub


def brute_force_mine(db, minsupp: int):
    """All frequent connected subgraphs by full enumeration.

    Returns {canonical form: (representative graph, occurrence frozenset)}.
    """
    by_form: dict = {}
    for tid, g in enumerate(db.transactions):
        seen_here = set()
        for sub in connected_subgraphs(g):
            form = perm_canonical(sub)
            if form in seen_here:
                continue
            seen_here.add(form)
            rep, occ = by_form.get(form, (sub, set()))
            occ.add(tid)
            by_form[form] = (rep, occ)
    return {
        form: (rep, frozenset(occ))
        for form, (rep, occ) in by_form.items()
        if len(occ) >= minsupp
    }


# ---------------------------------------------------------------------------
# Naive grouping re-run (the published merge loop, recomputed from scratch)
# ---------------------------------------------------------------------------

def naive_pregroup_partition(lattice, maxdist) -> set[frozenset[int]]:
    ids = sorted(lattice.pattern_ids)
    children: dict[int, list[int]] = {pid: [] for pid in ids}
    for p, c in lattice.edges:
        children[p].append(c)

    def reaches(a: int, b: int) -> bool:
        stack = [a]
        seen = set()
        while stack:
            x = stack.pop()
            if x == b:
                return True
            for c in children[x]:
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        return False

    def pair_dist(a: int, b: int) -> Fraction:
        if reaches(a, b):
            sub, sup = a, b
        elif reaches(b, a):
            sub, sup = b, a
        else:
            return Fraction(1)
        return Fraction(
            lattice.support(sub) - lattice.support(sup), lattice.support(sub)
        )

    def cdist(ca: frozenset[int], cb: frozenset[int]) -> Fraction:
        pg = [
            pair_dist(g, h)
            for g in ca
            for h in cb
            if pair_dist(g, h) != 1
        ]
        return max(pg) if pg else Fraction(-1)

    limit = Fraction(maxdist)
    clusters = [frozenset([pid]) for pid in ids]
    while True:
        best = None
        for i in range(len(clusters)):
            for j in range(i + 1, len(clusters)):
                a, b = clusters[i], clusters[j]
                if min(a) > min(b):
                    a, b = b, a
                d = cdist(a, b)
                if d >= 0:
                    key = (d, min(a), min(b))
                    if best is None or key < best[0]:
                        best = (key, a, b)
        if best is None or best[0][0] > limit:
            break
        (_, a, b) = best
        clusters = [c for c in clusters if c is not a and c is not b]
        clusters.append(a | b)
    return set(clusters)
