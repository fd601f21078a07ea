"""Synthetic lattice instances for benchmarks and the acceptance suite.

The standard instance is a set of disjoint chains of near-duplicate
patterns: each chain is a run of one-edge path extensions whose occurrence
sets shrink by one transaction per step, so within-chain distances are tiny
while unrelated chains never merge. Chains are organized into co-occurrence
blocks: chains of one block share most of their transactions, different
blocks are disjoint, which gives the 2D layout a clear target geometry.
"""

from __future__ import annotations

import random

from .graphs import LabeledGraph
from .lattice import Lattice
from .occurrence import OccurrenceSet, OccurrenceStore


def chain_lattice_instance(
    n_chains: int = 50,
    chain_len: int = 4,
    blocks: int = 5,
    block_size: int = 800,
    base_support: int = 400,
    core_support: int = 360,
    seed: int = 7,
) -> Lattice:
    """Build the chains-of-near-duplicates lattice.

    Every chain c holds ``chain_len`` patterns: paths of 1..chain_len edges,
    all vertices labeled c, each extending the previous one. Supports step
    down by one per extension, so consecutive links sit at distance
    1/support and whole chains merge at maxdist >= (chain_len-1)/support.
    """
    if n_chains % blocks:
        raise ValueError("n_chains must be divisible by blocks")
    rng = random.Random(seed)
    universe = blocks * block_size
    per_block = n_chains // blocks

    patterns: dict[int, LabeledGraph] = {}
    supports: dict[int, int] = {}
    store = OccurrenceStore(universe)
    edges: list[tuple[int, int]] = []

    for block in range(blocks):
        lo = block * block_size
        block_ids = list(range(lo, lo + block_size))
        core = sorted(rng.sample(block_ids, core_support))
        rest = sorted(set(block_ids) - set(core))
        for j in range(per_block):
            chain = block * per_block + j
            base = sorted(core + rng.sample(rest, base_support - core_support))
            occ = list(base)
            for k in range(chain_len):
                pid = chain * chain_len + k
                n_vertices = k + 2
                patterns[pid] = LabeledGraph(
                    [chain] * n_vertices, [(i, i + 1, 0) for i in range(n_vertices - 1)]
                )
                supports[pid] = len(occ)
                store.add(pid, OccurrenceSet.from_indices(occ, universe))
                if k > 0:
                    edges.append((pid - 1, pid))
                occ = occ[:-1]  # drop one transaction per extension
    return Lattice(1, patterns, supports, store, edges, validate=False)
