"""Random-pair push-pull embedding of groups into the plane.

Groups start at seeded-random positions in the unit square. Each step picks
two distinct groups at random and moves both along their difference vector
by alpha * (euclidean distance - target distance); all four coordinate
updates read the pre-update positions, so every step conserves the pair
centroid exactly and the layout drifts toward the target distances.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from typing import IO, Callable, Sequence

from .distance import group_dist
from .errors import FormatError, FragmapError
from .lattice import Lattice
from .pregroup import Grouping


@dataclass
class EmbedConfig:
    """Hyperparameters for one embedding run."""
    alpha: float = 0.1
    iterations: int = 1_000_000
    seed: int = 0
    maxdist: float | None = None
    curve_every: int = 10_000


class GroupDistanceSource:
    """Target distances between groups, via their representatives.

    Each distinct pair is resolved with exactly one intersection query
    against the occurrence store; ``precompute`` fills the whole matrix up
    front, otherwise pairs are cached on demand.
    """

    def __init__(self, lattice: Lattice, grouping: Grouping, precompute: bool = False):
        self._reps = [g.representative for g in grouping.groups]
        self._store = lattice.store
        self._cache: dict[tuple[int, int], float] = {}
        if precompute:
            m = len(self._reps)
            for i in range(m):
                for j in range(i + 1, m):
                    self.get(i, j)

    def __len__(self) -> int:
        return len(self._reps)

    def get(self, i: int, j: int) -> float:
        if i == j:
            return 0.0
        key = (i, j) if i < j else (j, i)
        value = self._cache.get(key)
        if value is None:
            value = float(
                group_dist(
                    self._store.get(self._reps[key[0]]),
                    self._store.get(self._reps[key[1]]),
                )
            )
            self._cache[key] = value
        return value


class MatrixTargets:
    """Target distances from a plain matrix/dict, for synthetic layouts."""

    def __init__(self, matrix: Sequence[Sequence[float]]):
        self._m = matrix

    def __len__(self) -> int:
        return len(self._m)

    def get(self, i: int, j: int) -> float:
        return float(self._m[i][j])


@dataclass
class EmbeddingModel:
    """2D coordinates per group plus the provenance that produced them."""

    group_ids: list[int]
    xs: list[float]
    ys: list[float]
    alpha: float
    iterations: int
    seed: int
    maxdist: float | None = None
    _rng: random.Random = field(default=None, repr=False)  # type: ignore[assignment]

    def copy(self) -> "EmbeddingModel":
        clone = EmbeddingModel(
            list(self.group_ids), list(self.xs), list(self.ys),
            self.alpha, self.iterations, self.seed, self.maxdist,
        )
        if self._rng is not None:
            clone._rng = random.Random()
            clone._rng.setstate(self._rng.getstate())
        return clone

    def eucl_dist(self, i: int, j: int) -> float:
        return math.hypot(self.xs[i] - self.xs[j], self.ys[i] - self.ys[j])

    # -- JSON -----------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "alpha": self.alpha,
            "r": self.iterations,
            "seed": self.seed,
            "maxdist": self.maxdist,
            "points": [
                {"group": gid, "x": self.xs[k], "y": self.ys[k]}
                for k, gid in enumerate(self.group_ids)
            ],
        }

    def dump(self, stream: IO[str]) -> None:
        json.dump(self.to_json_obj(), stream, indent=1, sort_keys=True)
        stream.write("\n")

    def dump_path(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            self.dump(fh)


def load_model(stream: IO[str] | str) -> EmbeddingModel:
    text = stream if isinstance(stream, str) else stream.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from exc
    try:
        points = list(obj["points"])
        return EmbeddingModel(
            group_ids=[int(p["group"]) for p in points],
            xs=[float(p["x"]) for p in points],
            ys=[float(p["y"]) for p in points],
            alpha=float(obj["alpha"]),
            iterations=int(obj["r"]),
            seed=int(obj["seed"]),
            maxdist=None if obj.get("maxdist") is None else float(obj["maxdist"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed model JSON: {exc}") from exc


def load_model_path(path) -> EmbeddingModel:
    with open(path, "r", encoding="utf-8") as fh:
        return load_model(fh)


def init_model(
    group_ids: Sequence[int],
    seed: int,
    alpha: float = 0.1,
    maxdist: float | None = None,
) -> EmbeddingModel:
    """Place every group i.i.d. uniformly in the unit square (seeded)."""
    if len(group_ids) == 0:
        raise FragmapError("need at least one group")
    if not 0 <= alpha <= 1:
        raise FragmapError(f"alpha must be in [0, 1], got {alpha}")
    rng = random.Random(seed)
    xs, ys = [], []
    for _ in group_ids:
        xs.append(rng.random())
        ys.append(rng.random())
    model = EmbeddingModel(list(group_ids), xs, ys, alpha, 0, seed, maxdist)
    model._rng = rng
    return model


def update_pair(model: EmbeddingModel, i: int, j: int, target: float) -> EmbeddingModel:
    """Move points i and j along their difference vector by
    alpha * (euclidean - target); both displacements read pre-update
    coordinates, so the pair centroid is conserved."""
    if i == j:
        raise FragmapError("update_pair needs two distinct groups")
    xs, ys = model.xs, model.ys
    dx = xs[i] - xs[j]
    dy = ys[i] - ys[j]
    err = math.hypot(dx, dy) - target
    fx = model.alpha * err * dx
    fy = model.alpha * err * dy
    xs[i] -= fx
    ys[i] -= fy
    xs[j] += fx
    ys[j] += fy
    return model


def embed(
    model: EmbeddingModel,
    iterations: int,
    targets,
    curve_every: int = 0,
    curve_sink: Callable[[int, float, float], None] | None = None,
) -> EmbeddingModel:
    """Run ``iterations`` random-pair updates (deterministic per seed).

    When ``curve_every`` > 0, report (iteration, rse, squared-error sum) to
    ``curve_sink`` at iteration 0, every ``curve_every`` steps, and at the
    final iteration.
    """
    m = len(model.group_ids)
    if iterations < 0:
        raise FragmapError("iteration count must be >= 0")
    if iterations == 0:
        return model
    if m < 2:
        raise FragmapError("embedding needs at least two groups")
    rng = model._rng
    if rng is None:  # a reloaded model: continue from a fresh seeded stream
        rng = random.Random(model.seed)
        model._rng = rng

    def report(it: int) -> None:
        if curve_sink is not None:
            total = squared_error_sum(model, targets)
            pairs = m * (m - 1) // 2
            curve_sink(it, math.sqrt(total / pairs), total)

    if curve_every > 0:
        report(0)
    randrange = rng.randrange
    alpha = model.alpha
    xs, ys = model.xs, model.ys
    get_target = targets.get
    hypot = math.hypot
    for it in range(1, iterations + 1):
        i = randrange(m)
        j = randrange(m - 1)
        if j >= i:
            j += 1
        dx = xs[i] - xs[j]
        dy = ys[i] - ys[j]
        err = hypot(dx, dy) - get_target(i, j)
        fx = alpha * err * dx
        fy = alpha * err * dy
        xs[i] -= fx
        ys[i] -= fy
        xs[j] += fx
        ys[j] += fy
        if curve_every > 0 and (it % curve_every == 0 or it == iterations):
            report(it)
    model.iterations += iterations
    return model


def squared_error_sum(model: EmbeddingModel, targets) -> float:
    """Sum over group pairs of (euclidean - target)^2."""
    total = 0.0
    m = len(model.group_ids)
    for i in range(m):
        for j in range(i + 1, m):
            diff = model.eucl_dist(i, j) - targets.get(i, j)
            total += diff * diff
    return total


def rse(model: EmbeddingModel, targets) -> float:
    """Root of the per-pair mean squared distance discrepancy."""
    m = len(model.group_ids)
    if m < 2:
        raise FragmapError("rse needs at least two groups")
    pairs = m * (m - 1) // 2
    return math.sqrt(squared_error_sum(model, targets) / pairs)


def write_error_curve(stream: IO[str], samples: Sequence[tuple[int, float, float]]) -> None:
    """CSV error curve: iteration, rse, and the unnormalized squared sum."""
    stream.write("iteration,rse,sum_squared_error\n")
    for it, value, total in samples:
        stream.write(f"{it},{value!r},{total!r}\n")
