#!/usr/bin/env python3
"""Regenerate data/toy.graphs: 30 small molecule-like transaction graphs.

Three structural families share recurring fragments (a carbon ring, a
carboxyl-like tail, an amine branch), so mining at moderate support yields
a lattice with plenty of near-duplicate chains for grouping to collapse.
Deterministic: same seed, same file.
"""

from __future__ import annotations

import argparse
import pathlib
import random
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from fragmap.graphs import GraphDatabase, LabeledGraph, write_graph_file

C, N, O, S = 0, 1, 2, 3
SINGLE, DOUBLE = 1, 2

VERTEX_NAMES = {C: "C", N: "N", O: "O", S: "S"}
EDGE_NAMES = {SINGLE: "1", DOUBLE: "2"}


def ring_molecule(rng: random.Random) -> LabeledGraph:
    """Six-ring with alternating bond orders plus 0-2 decorations."""
    labels = [C] * 6
    edges = [(i, (i + 1) % 6, DOUBLE if i % 2 == 0 else SINGLE) for i in range(6)]
    for _ in range(rng.randint(0, 2)):
        anchor = rng.randrange(6)
        labels.append(rng.choice([O, N, C]))
        edges.append((anchor, len(labels) - 1, SINGLE))
    return LabeledGraph(labels, edges)


def acid_molecule(rng: random.Random) -> LabeledGraph:
    """Carbon chain ending in a carboxyl-like C(=O)-O tail."""
    length = rng.randint(3, 5)
    labels = [C] * length
    edges = [(i, i + 1, SINGLE) for i in range(length - 1)]
    head = length - 1
    labels += [O, O]
    edges += [(head, length, DOUBLE), (head, length + 1, SINGLE)]
    if rng.random() < 0.5:
        labels.append(rng.choice([C, S]))
        edges.append((0, len(labels) - 1, SINGLE))
    return LabeledGraph(labels, edges)


def amine_molecule(rng: random.Random) -> LabeledGraph:
    """Branched carbons around a nitrogen."""
    labels = [N]
    edges = []
    arms = rng.randint(2, 3)
    for _ in range(arms):
        arm_len = rng.randint(1, 3)
        prev = 0
        for _ in range(arm_len):
            labels.append(C)
            edges.append((prev, len(labels) - 1, SINGLE))
            prev = len(labels) - 1
        if rng.random() < 0.4:
            labels.append(O)
            edges.append((prev, len(labels) - 1, rng.choice([SINGLE, DOUBLE])))
    return LabeledGraph(labels, edges)


def build_database(seed: int = 2024) -> GraphDatabase:
    rng = random.Random(seed)
    makers = [ring_molecule, acid_molecule, amine_molecule]
    transactions = []
    for family in range(3):
        for _ in range(10):
            transactions.append(makers[family](rng))
    return GraphDatabase(transactions, VERTEX_NAMES, EDGE_NAMES)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument(
        "--out",
        default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "toy.graphs"),
    )
    args = parser.parse_args()
    db = build_database(args.seed)
    out = pathlib.Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(write_graph_file(db), encoding="utf-8")
    sizes = [g.vertex_count for g in db.transactions]
    print(f"wrote {len(db)} graphs ({min(sizes)}-{max(sizes)} vertices) to {out}")


if __name__ == "__main__":
    main()
