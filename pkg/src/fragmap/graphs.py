"""Labeled graphs, subgraph isomorphism and canonical codes.

Graphs are undirected and simple (no self-loops, no parallel edges); each
vertex and each edge carries a single integer label. Pattern graphs must be
connected, transaction graphs may be disconnected or even empty.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import FormatError


class LabeledGraph:
    """Immutable undirected graph with integer vertex and edge labels.

    ``vertex_labels[i]`` is the label of vertex ``i``; ``edges`` holds
    ``(u, v, label)`` triples normalized to ``u < v`` and sorted.
    """

    __slots__ = ("vertex_labels", "edges", "_adj", "_hash")

    def __init__(self, vertex_labels: Sequence[int], edges: Iterable[tuple[int, int, int]]):
        self.vertex_labels = tuple(int(l) for l in vertex_labels)
        n = len(self.vertex_labels)
        norm = []
        for u, v, label in edges:
            u, v, label = int(u), int(v), int(label)
            if u == v:
                raise FormatError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"edge ({u},{v}) references unknown vertex")
            if u > v:
                u, v = v, u
            norm.append((u, v, label))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a[:2] == b[:2]:
                raise FormatError(f"duplicate edge ({a[0]},{a[1]})")
        self.edges = tuple(norm)
        adj: list[dict[int, int]] = [{} for _ in range(n)]
        for u, v, label in self.edges:
            adj[u][v] = label
            adj[v][u] = label
        self._adj = tuple(adj)
        self._hash = hash((self.vertex_labels, self.edges))

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> dict[int, int]:
        """Map of neighbor -> edge label for vertex ``v``."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edge_label(self, u: int, v: int) -> int | None:
        return self._adj[u].get(v)

    def is_connected(self) -> bool:
        n = self.vertex_count
        if n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LabeledGraph)
            and self.vertex_labels == other.vertex_labels
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"LabeledGraph(vertices={self.vertex_labels}, edges={self.edges})"


class GraphDatabase:
    """Ordered collection of transaction graphs plus label display names."""

    __slots__ = ("transactions", "vertex_names", "edge_names")

    def __init__(
        self,
        transactions: Sequence[LabeledGraph],
        vertex_names: dict[int, str] | None = None,
        edge_names: dict[int, str] | None = None,
    ):
        self.transactions = tuple(transactions)
        self.vertex_names = dict(vertex_names or {})
        self.edge_names = dict(edge_names or {})

    def __len__(self) -> int:
        return len(self.transactions)

    def __getitem__(self, index: int) -> LabeledGraph:
        return self.transactions[index]

    def vertex_name(self, label: int) -> str:
        return self.vertex_names.get(label, str(label))

    def edge_name(self, label: int) -> str:
        return self.edge_names.get(label, str(label))


def subgraph_isomorphic(pattern: LabeledGraph, host: LabeledGraph) -> bool:
    """True iff ``pattern`` embeds injectively in ``host``.

    The embedding must preserve vertex labels, edge presence and edge labels;
    host edges outside the image are ignored (plain, non-induced subgraph
    isomorphism). A pattern occurring at several positions still yields a
    single True.
    """
    if pattern.vertex_count == 0:
        raise FormatError("empty pattern")
    if not pattern.is_connected():
        raise FormatError("pattern must be connected")
    if pattern.vertex_count > host.vertex_count or pattern.edge_count > host.edge_count:
        return False

    order = _search_order(pattern)
    pos_of = {v: k for k, v in enumerate(order)}
    # per search position: edge-label constraints toward already-mapped vertices
    constraints: list[list[tuple[int, int]]] = []
    for k, v in enumerate(order):
        cons = []
        for w, el in pattern.neighbors(v).items():
            if pos_of[w] < k:
                cons.append((pos_of[w], el))
        constraints.append(cons)

    mapped: list[int] = []
    used: set[int] = set()

    def candidates(k: int) -> Iterable[int]:
        v = order[k]
        if not constraints[k]:
            return range(host.vertex_count)
        anchor_pos, anchor_el = constraints[k][0]
        return (
            w
            for w, el in host.neighbors(mapped[anchor_pos]).items()
            if el == anchor_el
        )

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        vlabel = pattern.vertex_labels[v]
        vdeg = pattern.degree(v)
        for w in candidates(k):
            if w in used:
                continue
            if host.vertex_labels[w] != vlabel or host.degree(w) < vdeg:
                continue
            if any(host.edge_label(w, mapped[p]) != el for p, el in constraints[k]):
                continue
            mapped.append(w)
            used.add(w)
            if extend(k + 1):
                return True
            used.remove(w)
            mapped.pop()
        return False

    return extend(0)


def _search_order(g: LabeledGraph) -> list[int]:
    """Vertex order where every vertex after the first touches an earlier one."""
    order = [0]
    seen = {0}
    i = 0
    while i < len(order):
        for w in sorted(g.neighbors(order[i])):
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1
    return order


# ---------------------------------------------------------------------------
# Canonical code: minimal DFS code
# ---------------------------------------------------------------------------

def canonical_code(g: LabeledGraph) -> bytes:
    """Deterministic byte code equal for exactly the label-isomorphic graphs.

    Uses the lexicographically minimal DFS code over all DFS traversals, so
    it doubles as a duplicate filter during mining.
    """
    if g.vertex_count == 0:
        raise FormatError("empty graph has no canonical code")
    if not g.is_connected():
        raise FormatError("canonical code requires a connected graph")
    if g.edge_count == 0:
        return b"v%d" % g.vertex_labels[0]
    code = _min_dfs_code(g)
    return b"|".join(b"%d,%d,%d,%d,%d" % t for t in code)


def _rightmost_path(code: list[tuple[int, int, int, int, int]]) -> list[int]:
    """DFS indices on the rightmost path, from the rightmost vertex to root."""
    target = max(max(t[0], t[1]) for t in code)
    path = []
    for t in reversed(code):
        frm, to = t[0], t[1]
        if frm < to and to == target:
            path.append(to)
            target = frm
    path.append(0)
    return path


def _min_dfs_code(g: LabeledGraph) -> list[tuple[int, int, int, int, int]]:
    labels = g.vertex_labels
    n_edges = g.edge_count
    edge_id = {}
    for i, (u, v, _) in enumerate(g.edges):
        edge_id[(u, v)] = i
        edge_id[(v, u)] = i

    start = min(
        (labels[a], el, labels[b])
        for u, v, el in g.edges
        for a, b in ((u, v), (v, u))
    )
    code = [(0, 1, *start)]
    # an embedding is (vertex-at-dfs-index list, frozenset of used edge ids)
    embeddings = [
        ((a, b), frozenset([edge_id[(a, b)]]))
        for u, v, el in g.edges
        for a, b in ((u, v), (v, u))
        if (labels[a], el, labels[b]) == start
    ]

    while len(code) < n_edges:
        rmpath = _rightmost_path(code)
        maxtoc = rmpath[0]
        # the vertex label at a DFS index is fixed by the code prefix
        label_at = [labels[v] for v in embeddings[0][0]]
        # candidate keys: backward (0, j, elabel), forward (1, -i, elabel, vlabel)
        best_key = None
        realizers: list[tuple[tuple, ...]] = []
        for vmap, used in embeddings:
            w = vmap[maxtoc]
            for j in rmpath[1:]:
                x = vmap[j]
                el = g.edge_label(w, x)
                if el is None or edge_id[(w, x)] in used:
                    continue
                key = (0, j, el)
                if best_key is None or key < best_key:
                    best_key, realizers = key, []
                if key == best_key:
                    realizers.append((vmap, used | {edge_id[(w, x)]}))
            if best_key is not None and best_key[0] == 0:
                continue  # backward always beats forward; skip forward scan
            for i in rmpath:
                y = vmap[i]
                for z, el in g.neighbors(y).items():
                    if z in vmap:
                        continue
                    key = (1, -i, el, labels[z])
                    if best_key is None or key < best_key:
                        best_key, realizers = key, []
                    if key == best_key:
                        realizers.append((vmap + (z,), used | {edge_id[(y, z)]}))
        assert best_key is not None, "connected graph ran out of extensions"
        if best_key[0] == 0:
            _, j, el = best_key
            code.append((maxtoc, j, label_at[maxtoc], el, label_at[j]))
        else:
            _, neg_i, el, zl = best_key
            code.append((-neg_i, maxtoc + 1, label_at[-neg_i], el, zl))
        embeddings = sorted(set(realizers), key=lambda e: e[0])
    return code


# ---------------------------------------------------------------------------
# Transactional graph file format (gSpan style)
# ---------------------------------------------------------------------------

def parse_graph_file(text: str) -> GraphDatabase:
    """Parse the line-based transactional format.

    ``t # <n>`` starts transaction ``n``; ``v <id> <label>`` declares a
    vertex (ids 0-based and consecutive per transaction); ``e <u> <v>
    <label>`` declares an undirected edge. ``#``-prefixed lines are comments;
    comments of the shape ``# vlabel <id> <name>`` / ``# elabel <id> <name>``
    register display names for labels.
    """
    transactions: list[LabeledGraph] = []
    vertex_names: dict[int, str] = {}
    edge_names: dict[int, str] = {}
    cur_labels: list[int] | None = None
    cur_edges: list[tuple[int, int, int]] | None = None

    def flush():
        nonlocal cur_labels, cur_edges
        if cur_labels is not None:
            transactions.append(LabeledGraph(cur_labels, cur_edges))
        cur_labels, cur_edges = None, None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) >= 3 and parts[0] in ("vlabel", "elabel"):
                try:
                    label = int(parts[1])
                except ValueError:
                    continue
                name = " ".join(parts[2:])
                (vertex_names if parts[0] == "vlabel" else edge_names)[label] = name
            continue
        parts = line.split()
        try:
            if parts[0] == "t":
                if len(parts) != 3 or parts[1] != "#":
                    raise FormatError(f"line {lineno}: malformed transaction header")
                flush()
                if int(parts[2]) == -1:  # conventional terminator record
                    break
                cur_labels, cur_edges = [], []
            elif parts[0] == "v":
                if cur_labels is None:
                    raise FormatError(f"line {lineno}: vertex outside transaction")
                if len(parts) != 3:
                    raise FormatError(f"line {lineno}: malformed vertex line")
                vid = int(parts[1])
                if vid != len(cur_labels):
                    raise FormatError(
                        f"line {lineno}: vertex ids must be 0-based and consecutive"
                    )
                cur_labels.append(int(parts[2]))
            elif parts[0] == "e":
                if cur_edges is None:
                    raise FormatError(f"line {lineno}: edge outside transaction")
                if len(parts) != 4:
                    raise FormatError(f"line {lineno}: malformed edge line")
                cur_edges.append((int(parts[1]), int(parts[2]), int(parts[3])))
            else:
                raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
    flush()
    return GraphDatabase(transactions, vertex_names, edge_names)


def write_graph_file(db: GraphDatabase) -> str:
    """Serialize a database back to the transactional format."""
    out = []
    for label in sorted(db.vertex_names):
        out.append(f"# vlabel {label} {db.vertex_names[label]}")
    for label in sorted(db.edge_names):
        out.append(f"# elabel {label} {db.edge_names[label]}")
    for i, g in enumerate(db.transactions):
        out.append(f"t # {i}")
        for vid, vl in enumerate(g.vertex_labels):
            out.append(f"v {vid} {vl}")
        for u, v, el in g.edges:
            out.append(f"e {u} {v} {el}")
    return "\n".join(out) + "\n"
