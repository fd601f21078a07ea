"""Agglomerative grouping of lattice-related near-duplicate patterns.

Starting from singleton clusters, repeatedly merge the pair with the
smallest non-negative cluster distance while it stays within ``maxdist``.
Cluster distance is the *largest* related-pair distance between two
clusters (complete linkage over supergraph-subgraph pairs) and -1 when no
pair is related, so only chains of lattice-related patterns ever merge.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import IO

from .distance import dist_parent_child, smallest_member
from .errors import FormatError, FragmapError
from .lattice import Lattice


@dataclass(frozen=True)
class MergeEvent:
    """One accepted merge: the two clusters' smallest ids and their distance."""
    a: int
    b: int
    dist: Fraction


@dataclass(frozen=True)
class Group:
    members: tuple[int, ...]
    representative: int
    trace: tuple[MergeEvent, ...]


@dataclass(frozen=True)
class Grouping:
    maxdist: float
    groups: tuple[Group, ...]

    def group_of(self) -> dict[int, int]:
        """Pattern id -> group index."""
        out = {}
        for gi, group in enumerate(self.groups):
            for pid in group.members:
                out[pid] = gi
        return out

    def member_sets(self) -> list[frozenset[int]]:
        return [frozenset(g.members) for g in self.groups]

    # -- JSON ---------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "maxdist": self.maxdist,
            "groups": [
                {
                    "id": gi,
                    "members": list(group.members),
                    "representative": group.representative,
                    "trace": [
                        {"a": ev.a, "b": ev.b, "dist": float(ev.dist)}
                        for ev in group.trace
                    ],
                }
                for gi, group in enumerate(self.groups)
            ],
        }

    def dump(self, stream: IO[str]) -> None:
        json.dump(self.to_json_obj(), stream, indent=1, sort_keys=True)
        stream.write("\n")

    def dump_path(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            self.dump(fh)


def load_grouping(stream: IO[str] | str) -> Grouping:
    text = stream if isinstance(stream, str) else stream.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from exc
    try:
        groups = []
        for entry in sorted(obj["groups"], key=lambda e: int(e["id"])):
            trace = tuple(
                MergeEvent(int(t["a"]), int(t["b"]), Fraction(t["dist"]))
                for t in entry["trace"]
            )
            groups.append(
                Group(tuple(int(m) for m in entry["members"]),
                      int(entry["representative"]), trace)
            )
        return Grouping(float(obj["maxdist"]), tuple(groups))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed grouping JSON: {exc}") from exc


def load_grouping_path(path) -> Grouping:
    with open(path, "r", encoding="utf-8") as fh:
        return load_grouping(fh)


def pregroup(lattice: Lattice, maxdist: float) -> Grouping:
    """Run the merge loop and return the final partition.

    Ties on the minimal cluster distance break toward the lexicographically
    smallest (min id of first cluster, min id of second cluster). The loop
    stops when the smallest distance exceeds ``maxdist`` or no related pair
    remains across clusters.
    """
    if not 0 <= maxdist <= 1:
        raise FragmapError(f"maxdist must be in [0, 1], got {maxdist}")
    limit = Fraction(maxdist)

    ids = lattice.pattern_ids
    members: dict[int, list[int]] = {pid: [pid] for pid in ids}  # key = min member id
    trace: dict[int, list[MergeEvent]] = {pid: [] for pid in ids}
    generation: dict[int, int] = {pid: 0 for pid in ids}

    # scan every pattern pair once; only lattice-related ones can ever merge
    rel: dict[int, dict[int, Fraction]] = {pid: {} for pid in ids}
    heap: list[tuple[Fraction, int, int, int, int]] = []
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            oriented = lattice.related(a, b)
            if oriented is None:
                continue
            sub, sup = oriented
            d = dist_parent_child(lattice.support(sub), lattice.support(sup))
            rel[a][b] = d
            rel[b][a] = d
            heap.append((d, a, b, 0, 0))
    heapq.heapify(heap)

    while heap:
        d, a, b, gen_a, gen_b = heapq.heappop(heap)
        if generation.get(a) != gen_a or generation.get(b) != gen_b:
            continue  # stale entry for a merged-away cluster
        if d > limit:
            break  # minimal qualifying distance already exceeds the threshold
        # merge b into a (a < b); the union keeps key a
        ev = MergeEvent(a, b, d)
        members[a].extend(members.pop(b))
        trace[a].extend(trace.pop(b))
        trace[a].append(ev)
        generation[a] += 1
        del generation[b]
        rel_a = rel[a]
        rel_b = rel.pop(b)
        rel_a.pop(b, None)
        rel_b.pop(a, None)
        for other, d_other in rel_b.items():
            prev = rel_a.get(other)
            if prev is None or d_other > prev:
                rel_a[other] = d_other
            rel[other].pop(b, None)
            rel[other][a] = rel_a[other]
        for other, d_other in rel_a.items():
            x, y = (a, other) if a < other else (other, a)
            heapq.heappush(
                heap, (d_other, x, y, generation[x], generation[y])
            )

    groups = []
    for key in sorted(members):
        member_ids = tuple(sorted(members[key]))
        rep = smallest_member(member_ids, lattice)
        groups.append(Group(member_ids, rep, tuple(trace[key])))
    return Grouping(float(maxdist), tuple(groups))


def check_partition(lattice: Lattice, grouping: Grouping) -> None:
    """Raise unless the grouping partitions exactly the lattice's ids."""
    from .errors import IncoherentArtifacts

    seen: set[int] = set()
    for group in grouping.groups:
        for pid in group.members:
            if pid in seen:
                raise IncoherentArtifacts(f"pattern {pid} appears in two groups")
            seen.add(pid)
        if group.representative not in group.members:
            raise IncoherentArtifacts(
                f"representative {group.representative} not among members"
            )
    lattice_ids = set(lattice.pattern_ids)
    if seen != lattice_ids:
        missing = sorted(lattice_ids - seen)[:5]
        extra = sorted(seen - lattice_ids)[:5]
        raise IncoherentArtifacts(
            f"grouping does not partition the lattice (missing {missing}, "
            f"unknown {extra})"
        )


def access_savings(lattice: Lattice, grouping: Grouping) -> tuple[int, int]:
    """Pairwise-distance counts before and after grouping: n(n-1)/2 over
    patterns vs m(m-1)/2 over groups."""
    n = len(lattice)
    m = len(grouping.groups)
    return n * (n - 1) // 2, m * (m - 1) // 2
