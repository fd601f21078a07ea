#!/usr/bin/env python3
"""Runtime experiment: how the merge threshold changes pipeline time.

For each maxdist, run grouping and then the embedding stage (target-distance
matrix fill plus the update loop) on the synthetic chain instance, and report
the stage timings plus the intersection-query counts.

Usage: python scripts/runtime_vs_maxdist.py --iters 50000
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from fragmap.embedder import GroupDistanceSource, embed, init_model
from fragmap.pregroup import access_savings, pregroup
from fragmap.synthetic import chain_lattice_instance


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--iters", type=int, default=50_000)
    parser.add_argument("--alpha", type=float, default=0.1)
    parser.add_argument("--steps", type=int, default=7, help="maxdist settings, 0.05 apart")
    args = parser.parse_args()

    lattice = chain_lattice_instance()
    list(lattice.related_pairs())  # warm the reachability cache
    print(f"{len(lattice)} patterns; iters={args.iters}")
    print(f"{'maxdist':>8} {'groups':>7} {'group_s':>8} {'embed_s':>8} "
          f"{'total_s':>8} {'queries':>8}")
    for k in range(args.steps):
        maxdist = round(0.05 * k, 2)
        t0 = time.perf_counter()
        grouping = pregroup(lattice, maxdist)
        t_group = time.perf_counter() - t0

        lattice.store.counter.reset()
        t0 = time.perf_counter()
        targets = GroupDistanceSource(lattice, grouping, precompute=True)
        model = init_model(list(range(len(grouping.groups))), seed=1, alpha=args.alpha)
        embed(model, args.iters, targets)
        t_embed = time.perf_counter() - t0
        queries = lattice.store.counter.snapshot()["intersections"]

        _, pairs_after = access_savings(lattice, grouping)
        assert queries == pairs_after
        print(f"{maxdist:>8.2f} {len(grouping.groups):>7} {t_group:>8.3f} "
              f"{t_embed:>8.3f} {t_group + t_embed:>8.3f} {queries:>8}")


if __name__ == "__main__":
    main()
