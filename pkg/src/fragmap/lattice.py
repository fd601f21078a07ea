"""Frequent-pattern lattice: patterns with supports, occurrences and
parent -> child one-edge-extension links.

The lattice is a DAG: an edge (p, c) means pattern c has exactly one edge
more than pattern p and p is a subgraph of c. Supports are anti-monotone
along edges and never drop below the mining threshold.
"""

from __future__ import annotations

import json
from typing import IO, Iterable

from .errors import FormatError
from .graphs import LabeledGraph, canonical_code, subgraph_isomorphic
from .occurrence import OccurrenceSet, OccurrenceStore


class Lattice:
    """Immutable pattern lattice over a transaction universe."""

    def __init__(
        self,
        minsupp: int,
        patterns: dict[int, LabeledGraph],
        supports: dict[int, int],
        store: OccurrenceStore,
        edges: Iterable[tuple[int, int]],
        validate: bool = True,
    ):
        self.minsupp = int(minsupp)
        self.patterns = dict(patterns)
        self.supports = dict(supports)
        self.store = store
        self.edges = tuple(sorted(set((int(p), int(c)) for p, c in edges)))
        self._parents: dict[int, list[int]] = {pid: [] for pid in self.patterns}
        self._children: dict[int, list[int]] = {pid: [] for pid in self.patterns}
        for p, c in self.edges:
            if p in self._children and c in self._parents:
                self._children[p].append(c)
                self._parents[c].append(p)
        self._order = sorted(self.patterns)
        self._index = {pid: k for k, pid in enumerate(self._order)}
        self._ancestor_masks: dict[int, int] | None = None
        if validate:
            self.validate()

    # -- basic accessors -----------------------------------------------------

    @property
    def pattern_ids(self) -> list[int]:
        return list(self._order)

    @property
    def universe(self) -> int:
        return self.store.universe

    def graph(self, pattern_id: int) -> LabeledGraph:
        return self.patterns[pattern_id]

    def support(self, pattern_id: int) -> int:
        return self.supports[pattern_id]

    def occurrences(self, pattern_id: int) -> OccurrenceSet:
        return self.store.get(pattern_id)

    def parents(self, pattern_id: int) -> list[int]:
        return sorted(self._parents[pattern_id])

    def children(self, pattern_id: int) -> list[int]:
        return sorted(self._children[pattern_id])

    def __len__(self) -> int:
        return len(self.patterns)

    def __contains__(self, pattern_id: int) -> bool:
        return pattern_id in self.patterns

    # -- supergraph reachability ----------------------------------------------

    def _masks(self) -> dict[int, int]:
        if self._ancestor_masks is None:
            masks = {pid: 0 for pid in self._order}
            # parents have strictly fewer edges, so edge count is a topo order
            for pid in sorted(self._order, key=lambda p: self.patterns[p].edge_count):
                m = 0
                for parent in self._parents[pid]:
                    m |= masks[parent] | (1 << self._index[parent])
                masks[pid] = m
            self._ancestor_masks = masks
        return self._ancestor_masks

    def is_ancestor(self, ancestor_id: int, descendant_id: int) -> bool:
        """True iff ``descendant`` extends ``ancestor`` along lattice edges."""
        if ancestor_id not in self.patterns or descendant_id not in self.patterns:
            unknown = ancestor_id if ancestor_id not in self.patterns else descendant_id
            raise KeyError(f"unknown pattern id {unknown}")
        return bool(self._masks()[descendant_id] >> self._index[ancestor_id] & 1)

    def related(self, id_a: int, id_b: int) -> tuple[int, int] | None:
        """Orient a pair as (subgraph id, supergraph id), or None if unrelated."""
        if self.is_ancestor(id_a, id_b):
            return (id_a, id_b)
        if self.is_ancestor(id_b, id_a):
            return (id_b, id_a)
        return None

    def related_pairs(self) -> Iterable[tuple[int, int]]:
        """All (ancestor, descendant) pairs, ancestors first."""
        masks = self._masks()
        for pid in self._order:
            m = masks[pid]
            while m:
                low = m & -m
                yield self._order[low.bit_length() - 1], pid
                m ^= low

    # -- validation ------------------------------------------------------------

    def validate(self) -> None:
        if self.minsupp < 1:
            raise FormatError("minsupp must be >= 1")
        seen_codes: dict[bytes, int] = {}
        for pid, g in self.patterns.items():
            if g.vertex_count == 0:
                raise FormatError(f"pattern {pid} is empty")
            if not g.is_connected():
                raise FormatError(f"pattern {pid} is not connected")
            code = canonical_code(g)
            if code in seen_codes:
                raise FormatError(
                    f"patterns {seen_codes[code]} and {pid} are isomorphic duplicates"
                )
            seen_codes[code] = pid
            if pid not in self.supports:
                raise FormatError(f"pattern {pid} has no support")
            if pid not in self.store:
                raise FormatError(f"pattern {pid} has no occurrence set")
            if self.supports[pid] != self.store.support(pid):
                raise FormatError(
                    f"pattern {pid}: support {self.supports[pid]} != occurrence "
                    f"cardinality {self.store.support(pid)}"
                )
            if self.supports[pid] < self.minsupp:
                raise FormatError(
                    f"pattern {pid}: support {self.supports[pid]} < minsupp {self.minsupp}"
                )
        for p, c in self.edges:
            if p not in self.patterns or c not in self.patterns:
                raise FormatError(f"edge ({p},{c}) references unknown pattern")
            gp, gc = self.patterns[p], self.patterns[c]
            if gc.edge_count != gp.edge_count + 1:
                raise FormatError(
                    f"edge ({p},{c}): child must have exactly one more edge"
                )
            if self.supports[c] > self.supports[p]:
                raise FormatError(
                    f"edge ({p},{c}): child support {self.supports[c]} exceeds "
                    f"parent support {self.supports[p]}"
                )
            if not subgraph_isomorphic(gp, gc):
                raise FormatError(f"edge ({p},{c}): parent is not a subgraph of child")

    # -- JSON round trip ---------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "minsupp": self.minsupp,
            "patterns": [
                {
                    "id": pid,
                    "vertices": list(self.patterns[pid].vertex_labels),
                    "edges": [list(e) for e in self.patterns[pid].edges],
                    "support": self.supports[pid],
                    "occurrences": self.store.get(pid).to_run_string(),
                }
                for pid in self._order
            ],
            "edges": [list(e) for e in self.edges],
        }

    def dump(self, stream: IO[str]) -> None:
        json.dump(self.to_json_obj(), stream, indent=1, sort_keys=True)
        stream.write("\n")

    def dump_path(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            self.dump(fh)


def import_lattice(stream: IO[str] | str) -> Lattice:
    """Load and validate a lattice from its JSON form.

    Invariant violations (duplicate ids, anti-monotonicity breaches, edges
    whose size delta is not one, ...) raise FormatError rather than being
    repaired.
    """
    text = stream if isinstance(stream, str) else stream.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise FormatError("lattice JSON must be an object")
    for key in ("minsupp", "patterns", "edges"):
        if key not in obj:
            raise FormatError(f"lattice JSON missing key {key!r}")

    patterns: dict[int, LabeledGraph] = {}
    supports: dict[int, int] = {}
    occ: dict[int, OccurrenceSet] = {}
    universe = None
    for entry in obj["patterns"]:
        try:
            pid = int(entry["id"])
            graph = LabeledGraph(entry["vertices"], [tuple(e) for e in entry["edges"]])
            supp = int(entry["support"])
            occ_set = OccurrenceSet.from_run_string(entry["occurrences"])
        except (KeyError, TypeError) as exc:
            raise FormatError(f"malformed pattern entry: {exc}") from exc
        if pid in patterns:
            raise FormatError(f"duplicate pattern id {pid}")
        if universe is None:
            universe = occ_set.universe
        elif occ_set.universe != universe:
            raise FormatError(
                f"pattern {pid}: occurrence length {occ_set.universe} != {universe}"
            )
        patterns[pid] = graph
        supports[pid] = supp
        occ[pid] = occ_set

    store = OccurrenceStore(universe if universe is not None else 0)
    for pid, s in occ.items():
        store.add(pid, s)

    edges = []
    for e in obj["edges"]:
        if not isinstance(e, list) or len(e) != 2:
            raise FormatError(f"malformed lattice edge {e!r}")
        edges.append((int(e[0]), int(e[1])))

    return Lattice(int(obj["minsupp"]), patterns, supports, store, edges)


def import_lattice_path(path) -> Lattice:
    with open(path, "r", encoding="utf-8") as fh:
        return import_lattice(fh)
