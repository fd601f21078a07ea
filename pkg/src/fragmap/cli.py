"""Command-line driver: mine -> group -> embed -> render, plus stats and the
browsing service. Each stage persists its artifact so any later stage (or the
service) can reload it.

Exit codes: 0 ok, 2 usage, 3 format or invariant violation, 4 I/O. Every flag
can also be set through an environment variable named ``L2S_<FLAG>``.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import distance, embedder, export, miner
from .pregroup import access_savings, check_partition, load_grouping_path
from .pregroup import pregroup as run_pregroup
from .errors import FormatError, FragmapError, IncoherentArtifacts
from .graphs import parse_graph_file
from .lattice import import_lattice_path

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_IO = 4


def _env(flag: str, fallback=None):
    return os.environ.get("L2S_" + flag.upper().replace("-", "_"), fallback)


def _coerce(args: argparse.Namespace, name: str, conv, parser: argparse.ArgumentParser):
    """Convert env-sourced string defaults the way argparse converts flags."""
    value = getattr(args, name)
    if isinstance(value, str):
        try:
            setattr(args, name, conv(value))
        except ValueError:
            parser.error(f"invalid value for --{name.replace('_', '-')}: {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fragmap",
        description="Frequent-subgraph lattice mining, grouping and 2D maps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mine", help="mine a lattice from a transaction graph file")
    p.add_argument("input", help="graph file in the transactional format")
    p.add_argument("--minsupp", default=_env("minsupp"), help="minimum support (>= 1)")
    p.add_argument("--out", default=_env("out"), help="lattice JSON output path")

    p = sub.add_parser("group", help="group near-duplicate patterns")
    p.add_argument("lattice", help="lattice JSON")
    p.add_argument("--maxdist", default=_env("maxdist", "0.1"),
                   help="merge threshold in [0,1] (default 0.1)")
    p.add_argument("--out", default=_env("out"), help="grouping JSON output path")

    p = sub.add_parser("embed", help="embed groups into the plane")
    p.add_argument("lattice", help="lattice JSON")
    p.add_argument("grouping", help="grouping JSON")
    p.add_argument("--alpha", default=_env("alpha", "0.1"), help="learning rate in [0,1]")
    p.add_argument("--iters", default=_env("iters", "1000000"), help="update count")
    p.add_argument("--seed", default=_env("seed", "0"), help="RNG seed")
    p.add_argument("--out", default=_env("out"), help="model JSON output path")
    p.add_argument("--errcurve", default=_env("errcurve"),
                   help="optional error-curve CSV output path")
    p.add_argument("--errcurve-every", default=_env("errcurve-every", "10000"),
                   help="error-curve sampling interval (default 10000)")

    p = sub.add_parser("render", help="write threshold-edge SVG/CSV renders")
    p.add_argument("model", help="model JSON")
    p.add_argument("--lattice", default=_env("lattice"),
                   help="lattice JSON (for true group distances)")
    p.add_argument("--grouping", default=_env("grouping"), help="grouping JSON")
    p.add_argument("--mode", default=_env("mode"), choices=["close", "far"])
    p.add_argument("--threshold", default=_env("threshold"), help="edge threshold")
    p.add_argument("--svg", default=_env("svg"), help="SVG output path")
    p.add_argument("--csv", default=_env("csv"), help="CSV output path")

    p = sub.add_parser("stats", help="pair counts and occurrence-access counters")
    p.add_argument("lattice", help="lattice JSON")
    p.add_argument("grouping", help="grouping JSON")
    p.add_argument("--dist-cache", default=_env("dist-cache"),
                   help="optional CSV path for the pattern distance matrix")

    p = sub.add_parser("serve", help="serve the browsing API and UI")
    p.add_argument("--port", default=_env("port", "8000"))
    p.add_argument("--host", default=_env("host", "127.0.0.1"))
    p.add_argument("--lattice", default=_env("lattice"), required=False)
    p.add_argument("--grouping", default=_env("grouping"), required=False)
    p.add_argument("--model", default=_env("model"), required=False)
    p.add_argument("--graphs", default=_env("graphs"), required=False)
    p.add_argument("--ui", default=_env("ui"), help="static UI directory")
    return parser


def _require(parser, args, names):
    for name in names:
        if getattr(args, name) is None:
            parser.error(f"--{name.replace('_', '-')} is required")


def cmd_mine(parser, args) -> int:
    _coerce(args, "minsupp", int, parser)
    _require(parser, args, ["minsupp", "out"])
    if args.minsupp < 1:
        parser.error("--minsupp must be a positive integer")
    with open(args.input, "r", encoding="utf-8") as fh:
        db = parse_graph_file(fh.read())
    lattice = miner.mine(db, args.minsupp)
    lattice.dump_path(args.out)
    print(f"mined {len(lattice)} patterns over {lattice.universe} transactions "
          f"-> {args.out}")
    return EXIT_OK


def cmd_group(parser, args) -> int:
    _coerce(args, "maxdist", float, parser)
    _require(parser, args, ["out"])
    if not 0 <= args.maxdist <= 1:
        parser.error("--maxdist must lie in [0, 1]")
    lattice = import_lattice_path(args.lattice)
    grouping = run_pregroup(lattice, args.maxdist)
    grouping.dump_path(args.out)
    before, after = access_savings(lattice, grouping)
    print(f"grouped {len(lattice)} patterns into {len(grouping.groups)} groups "
          f"(pairs {before} -> {after}) -> {args.out}")
    return EXIT_OK


def cmd_embed(parser, args) -> int:
    _coerce(args, "alpha", float, parser)
    _coerce(args, "iters", int, parser)
    _coerce(args, "seed", int, parser)
    _coerce(args, "errcurve_every", int, parser)
    _require(parser, args, ["out"])
    if not 0 <= args.alpha <= 1:
        parser.error("--alpha must lie in [0, 1]")
    if args.iters < 0:
        parser.error("--iters must be >= 0")
    if args.errcurve_every < 1:
        parser.error("--errcurve-every must be >= 1")
    lattice = import_lattice_path(args.lattice)
    grouping = load_grouping_path(args.grouping)
    check_partition(lattice, grouping)
    targets = embedder.GroupDistanceSource(lattice, grouping, precompute=True)
    model = embedder.init_model(
        list(range(len(grouping.groups))), args.seed, args.alpha, grouping.maxdist
    )
    samples: list[tuple[int, float, float]] = []
    if args.iters > 0 and len(grouping.groups) >= 2:
        embedder.embed(
            model, args.iters, targets,
            curve_every=args.errcurve_every if args.errcurve else 0,
            curve_sink=lambda it, value, total: samples.append((it, value, total)),
        )
    model.dump_path(args.out)
    if args.errcurve:
        with open(args.errcurve, "w", encoding="utf-8") as fh:
            embedder.write_error_curve(fh, samples)
    print(f"embedded {len(grouping.groups)} groups in {args.iters} iterations "
          f"-> {args.out}")
    return EXIT_OK


def cmd_render(parser, args) -> int:
    _coerce(args, "threshold", float, parser)
    _require(parser, args, ["lattice", "grouping", "mode", "threshold"])
    if args.svg is None and args.csv is None:
        parser.error("need at least one of --svg / --csv")
    model = embedder.load_model_path(args.model)
    lattice = import_lattice_path(args.lattice)
    grouping = load_grouping_path(args.grouping)
    check_partition(lattice, grouping)
    if len(model.group_ids) != len(grouping.groups):
        raise IncoherentArtifacts(
            f"model has {len(model.group_ids)} points, grouping has "
            f"{len(grouping.groups)} groups"
        )
    targets = embedder.GroupDistanceSource(lattice, grouping)
    render = export.edges_at_threshold(model, targets, args.mode, args.threshold)
    if args.svg:
        export.write_text(args.svg, export.render_svg(render, model))
    if args.csv:
        export.write_text(args.csv, export.export_csv(render))
    print(f"rendered {len(render.edges)} {args.mode} edges at threshold "
          f"{args.threshold}")
    return EXIT_OK


def cmd_stats(parser, args) -> int:
    lattice = import_lattice_path(args.lattice)
    grouping = load_grouping_path(args.grouping)
    check_partition(lattice, grouping)
    before, after = access_savings(lattice, grouping)

    counter = lattice.store.counter
    counter.reset()
    ids = lattice.pattern_ids
    matrix_entries = []
    for i, id_a in enumerate(ids):
        for id_b in ids[i + 1:]:
            matrix_entries.append(
                (id_a, id_b,
                 distance.dist(lattice.occurrences(id_a), lattice.occurrences(id_b)))
            )
    ungrouped_queries = counter.snapshot()["intersections"]

    counter.reset()
    embedder.GroupDistanceSource(lattice, grouping, precompute=True)
    grouped = counter.snapshot()

    print(f"patterns {len(lattice)}")
    print(f"groups {len(grouping.groups)}")
    print(f"pairs_before {before}")
    print(f"pairs_after {after}")
    print(f"intersection_queries_ungrouped {ungrouped_queries}")
    print(f"intersection_queries_grouped {grouped['intersections']}")
    print(f"decompressions {grouped['decompressions']}")
    if args.dist_cache:
        with open(args.dist_cache, "w", encoding="utf-8") as fh:
            distance.save_distance_cache(fh, matrix_entries)
    return EXIT_OK


def cmd_serve(parser, args) -> int:
    _coerce(args, "port", int, parser)
    _require(parser, args, ["lattice", "grouping", "model", "graphs"])
    import uvicorn

    from .service import create_app

    app = create_app(args.lattice, args.grouping, args.model, args.graphs, args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


_HANDLERS = {
    "mine": cmd_mine,
    "group": cmd_group,
    "embed": cmd_embed,
    "render": cmd_render,
    "stats": cmd_stats,
    "serve": cmd_serve,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help (0) and usage (2)
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](parser, args)
    except SystemExit as exc:  # parser.error inside a handler
        return int(exc.code or 0)
    except (FormatError, IncoherentArtifacts) as exc:
        print(f"error: format: {_oneline(exc)}", file=sys.stderr)
        return EXIT_FORMAT
    except FragmapError as exc:
        print(f"error: usage: {_oneline(exc)}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: io: {_oneline(exc)}", file=sys.stderr)
        return EXIT_IO


def _oneline(exc: Exception) -> str:
    return " ".join(str(exc).split())


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
