"""Read-only HTTP API over pre-built artifacts, backing the browsing UI.

The service never mines or re-embeds; it loads a lattice, a grouping, a
model and the original transaction graphs at startup and answers pure
reads. The only mutable state is the occurrence access counter, which the
occurrence endpoint bumps so the UI can show how many times the compressed
data was touched.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles

from . import export
from .embedder import GroupDistanceSource, load_model_path
from .errors import FragmapError, IncoherentArtifacts
from .graphs import parse_graph_file
from .lattice import import_lattice_path
from .pregroup import check_partition, load_grouping_path

_FALLBACK_PAGE = """<!doctype html>
<html><head><title>fragmap</title></head>
<body><h1>fragmap service</h1>
<p>No UI bundle was found. The JSON API lives under <code>/api/</code>;
see <code>/docs</code> for the endpoint list.</p></body></html>
"""


def create_app(
    lattice_path: str,
    grouping_path: str,
    model_path: str,
    graphs_path: str,
    ui_dir: str | None = None,
) -> FastAPI:
    """Load all artifacts and wire the API.

    Malformed files raise immediately; a *coherence* problem between
    otherwise valid artifacts keeps the app serving but turns every API
    response into 409, so a browsing client sees what is wrong.
    """
    lattice = import_lattice_path(lattice_path)
    grouping = load_grouping_path(grouping_path)
    model = load_model_path(model_path)
    with open(graphs_path, "r", encoding="utf-8") as fh:
        db = parse_graph_file(fh.read())

    incoherent: str | None = None
    try:
        check_partition(lattice, grouping)
        if len(model.group_ids) != len(grouping.groups):
            raise IncoherentArtifacts(
                f"model has {len(model.group_ids)} points but grouping has "
                f"{len(grouping.groups)} groups"
            )
        if lattice.universe != len(db):
            raise IncoherentArtifacts(
                f"lattice universe {lattice.universe} != {len(db)} transactions"
            )
    except IncoherentArtifacts as exc:
        incoherent = str(exc)

    app = FastAPI(title="fragmap", docs_url="/docs")
    group_of = grouping.group_of() if incoherent is None else {}
    targets = GroupDistanceSource(lattice, grouping) if incoherent is None else None

    def guard() -> None:
        if incoherent is not None:
            raise HTTPException(status_code=409, detail=incoherent)

    @app.get("/api/lattice/summary")
    def lattice_summary():
        guard()
        return {
            "pattern_count": len(lattice),
            "minsupp": lattice.minsupp,
            "group_count": len(grouping.groups),
            "transactions": len(db),
        }

    @app.get("/api/patterns/{pattern_id}")
    def pattern_detail(pattern_id: int):
        guard()
        if pattern_id not in lattice:
            raise HTTPException(status_code=404, detail=f"unknown pattern {pattern_id}")
        g = lattice.graph(pattern_id)
        return {
            "id": pattern_id,
            "vertices": list(g.vertex_labels),
            "vertex_names": [db.vertex_name(l) for l in g.vertex_labels],
            "edges": [list(e) for e in g.edges],
            "edge_names": [db.edge_name(e[2]) for e in g.edges],
            "support": lattice.support(pattern_id),
            "size": g.vertex_count,
            "parents": lattice.parents(pattern_id),
            "children": lattice.children(pattern_id),
            "group": group_of.get(pattern_id),
        }

    @app.get("/api/patterns/{pattern_id}/occurrences")
    def pattern_occurrences(pattern_id: int):
        guard()
        if pattern_id not in lattice:
            raise HTTPException(status_code=404, detail=f"unknown pattern {pattern_id}")
        return lattice.store.members(pattern_id)

    @app.get("/api/groups")
    def groups():
        guard()
        return [
            {
                "id": gi,
                "representative": group.representative,
                "members": list(group.members),
                "supports": [lattice.support(pid) for pid in group.members],
                "sizes": [lattice.graph(pid).vertex_count for pid in group.members],
            }
            for gi, group in enumerate(grouping.groups)
        ]

    @app.get("/api/model")
    def model_view():
        guard()
        return model.to_json_obj()

    @app.get("/api/model/edges")
    def model_edges(mode: str, threshold: float):
        guard()
        try:
            render = export.edges_at_threshold(model, targets, mode, threshold)
        except FragmapError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return {
            "mode": render.mode,
            "threshold": render.threshold,
            "edges": [
                {
                    "g1": e.g1,
                    "g2": e.g2,
                    "eucl": e.eucl,
                    "target": e.target,
                    "shade": e.shade,
                }
                for e in render.edges
            ],
        }

    @app.get("/api/transactions/{index}")
    def transaction(index: int):
        guard()
        if not 0 <= index < len(db):
            raise HTTPException(status_code=404, detail=f"unknown transaction {index}")
        g = db[index]
        return {
            "index": index,
            "vertices": [
                {"id": vid, "label": vl, "name": db.vertex_name(vl)}
                for vid, vl in enumerate(g.vertex_labels)
            ],
            "edges": [
                {"u": u, "v": v, "label": el, "name": db.edge_name(el)}
                for u, v, el in g.edges
            ],
        }

    @app.get("/api/stats/access")
    def access_stats():
        guard()
        return lattice.store.counter.snapshot()

    if ui_dir and os.path.isdir(ui_dir):
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    else:
        @app.get("/")
        def index_page():
            from fastapi.responses import HTMLResponse

            return HTMLResponse(_FALLBACK_PAGE)

    return app
