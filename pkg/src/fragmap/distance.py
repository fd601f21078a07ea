"""Co-occurrence distances between patterns, groups and clusters.

All values are exact rationals in [0, 1]; only ``cluster_dist`` may return
the -1 sentinel meaning "no supergraph-subgraph relation, never merge".
Floats appear only at API edges (JSON artifacts, embedding targets).
"""

from __future__ import annotations

import csv
from fractions import Fraction
from typing import IO, Iterable

from .errors import FragmapError
from .lattice import Lattice
from .occurrence import OccurrenceSet, and_support

NO_RELATION = Fraction(-1)


def dist(a: OccurrenceSet, b: OccurrenceSet) -> Fraction:
    """Fraction of transactions holding exactly one of the two patterns,
    normalized by the transactions holding at least one.

    Computed from the two supports and a single intersection query; the
    union is derived, never queried.
    """
    sa, sb = a.support, b.support
    if sa + sb == 0:
        raise FragmapError("distance undefined for two empty occurrence sets")
    sab = and_support(a, b)
    return Fraction(sa + sb - 2 * sab, sa + sb - sab)


def dist_parent_child(parent_support: int, child_support: int) -> Fraction:
    """Distance between a pattern and one of its supergraphs, from supports
    alone (the supergraph occurs only where the subgraph does)."""
    if parent_support <= 0:
        raise FragmapError("parent support must be positive")
    if not 0 < child_support <= parent_support:
        raise FragmapError(
            f"child support {child_support} must be in 1..{parent_support}"
        )
    return Fraction(parent_support - child_support, parent_support)


def pregroup_dist(id_a: int, id_b: int, lattice: Lattice) -> Fraction:
    """Support-only distance if one pattern is a (transitive) supergraph of
    the other along lattice edges, else 1."""
    if id_a not in lattice or id_b not in lattice:
        raise KeyError(f"unknown pattern id {id_a if id_a not in lattice else id_b}")
    if id_a == id_b:
        return Fraction(0)
    rel = lattice.related(id_a, id_b)
    if rel is None:
        return Fraction(1)
    sub, sup = rel
    return dist_parent_child(lattice.support(sub), lattice.support(sup))


def cluster_dist(
    cluster_a: Iterable[int], cluster_b: Iterable[int], lattice: Lattice
) -> Fraction:
    """Largest related-pair distance across two clusters; -1 when no pair is
    lattice-related (such clusters are never merged)."""
    ca, cb = set(cluster_a), set(cluster_b)
    if not ca or not cb:
        raise FragmapError("clusters must be non-empty")
    if ca & cb:
        raise FragmapError(f"clusters overlap: {sorted(ca & cb)}")
    best: Fraction | None = None
    for g in ca:
        for h in cb:
            d = pregroup_dist(g, h, lattice)
            if d != 1 and (best is None or d > best):
                best = d
    return NO_RELATION if best is None else best


def smallest_member(members: Iterable[int], lattice: Lattice) -> int:
    """Representative: fewest vertices, ties broken by lowest pattern id."""
    return min(members, key=lambda pid: (lattice.graph(pid).vertex_count, pid))


def group_dist(
    rep_a: OccurrenceSet, rep_b: OccurrenceSet
) -> Fraction:
    """Distance between two groups = distance between their smallest-graph
    representatives; costs exactly one intersection query."""
    return dist(rep_a, rep_b)


# ---------------------------------------------------------------------------
# Optional distance-matrix cache (CSV: id1,id2,num,den)
# ---------------------------------------------------------------------------

def save_distance_cache(
    stream: IO[str], entries: Iterable[tuple[int, int, Fraction]]
) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["id1", "id2", "num", "den"])
    for id1, id2, value in entries:
        writer.writerow([id1, id2, value.numerator, value.denominator])


def load_distance_cache(stream: IO[str]) -> dict[tuple[int, int], Fraction]:
    reader = csv.reader(stream)
    header = next(reader, None)
    if header != ["id1", "id2", "num", "den"]:
        raise FragmapError(f"unexpected distance cache header {header!r}")
    out = {}
    for row in reader:
        if not row:
            continue
        id1, id2, num, den = (int(x) for x in row)
        out[(id1, id2)] = Fraction(num, den)
    return out
