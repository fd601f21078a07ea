#!/usr/bin/env python3
"""Layout-error experiment: embed the synthetic chain instance and write the
error curve (iteration, rse, squared-error sum) to CSV.

Usage: python scripts/error_curve.py --iters 1000000 --out curve.csv
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from fragmap.embedder import (
    EmbedConfig,
    GroupDistanceSource,
    embed,
    init_model,
    write_error_curve,
)
from fragmap.pregroup import pregroup
from fragmap.synthetic import chain_lattice_instance


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alpha", type=float, default=0.1)
    parser.add_argument("--iters", type=int, default=1_000_000)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--maxdist", type=float, default=0.1)
    parser.add_argument("--every", type=int, default=10_000)
    parser.add_argument("--out", default="curve.csv")
    args = parser.parse_args()
    config = EmbedConfig(
        alpha=args.alpha, iterations=args.iters, seed=args.seed,
        maxdist=args.maxdist, curve_every=args.every,
    )

    lattice = chain_lattice_instance()
    grouping = pregroup(lattice, config.maxdist)
    print(f"{len(lattice)} patterns -> {len(grouping.groups)} groups")
    targets = GroupDistanceSource(lattice, grouping, precompute=True)
    model = init_model(
        list(range(len(grouping.groups))), config.seed, config.alpha, config.maxdist
    )
    samples: list[tuple[int, float, float]] = []
    start = time.perf_counter()
    embed(model, config.iterations, targets, curve_every=config.curve_every,
          curve_sink=lambda it, v, s: samples.append((it, v, s)))
    elapsed = time.perf_counter() - start
    with open(args.out, "w", encoding="utf-8") as fh:
        write_error_curve(fh, samples)
    first, last = samples[0], samples[-1]
    print(f"embedded in {elapsed:.1f}s; rse {first[1]:.4f} -> {last[1]:.4f}")
    print(f"curve ({len(samples)} samples) -> {args.out}")


if __name__ == "__main__":
    main()
