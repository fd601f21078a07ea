#!/usr/bin/env python3
"""Snapshot API responses from the toy pipeline into frontend test fixtures.

Deterministic: re-running regenerates byte-identical JSON (same artifacts,
same responses), so the frontend tests always exercise the bundled dataset.
"""

from __future__ import annotations

import json
import pathlib
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from fastapi.testclient import TestClient

from fragmap import cli
from fragmap.service import create_app

FIXTURES = ROOT / "frontend" / "tests" / "fixtures"
DATA = ROOT / "data" / "toy.graphs"


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        tmp_path = pathlib.Path(tmp)
        lattice = tmp_path / "lattice.json"
        grouping = tmp_path / "grouping.json"
        model = tmp_path / "model.json"
        assert cli.run(["mine", str(DATA), "--minsupp", "6", "--out", str(lattice)]) == 0
        assert cli.run(["group", str(lattice), "--maxdist", "0.1", "--out", str(grouping)]) == 0
        assert cli.run(["embed", str(lattice), str(grouping), "--iters", "20000",
                        "--seed", "5", "--out", str(model)]) == 0
        app = create_app(str(lattice), str(grouping), str(model), str(DATA))
        client = TestClient(app)

        def snap(name: str, path: str, params=None):
            response = client.get(path, params=params)
            response.raise_for_status()
            out = FIXTURES / f"{name}.json"
            out.write_text(json.dumps(response.json(), indent=1, sort_keys=True) + "\n")
            print(f"  {out.relative_to(ROOT)}")

        snap("summary", "/api/lattice/summary")
        snap("model", "/api/model")
        snap("groups", "/api/groups")
        snap("pattern_0", "/api/patterns/0")
        snap("occurrences_0", "/api/patterns/0/occurrences")
        snap("edges_close_005", "/api/model/edges", {"mode": "close", "threshold": 0.05})
        snap("edges_far_095", "/api/model/edges", {"mode": "far", "threshold": 0.95})
        snap("transaction_0", "/api/transactions/0")

        # a pattern with both parents and children, for navigation tests
        groups = client.get("/api/groups").json()
        mid = None
        for g in groups:
            for pid in g["members"]:
                detail = client.get(f"/api/patterns/{pid}").json()
                if detail["parents"] and detail["children"]:
                    mid = detail
                    break
            if mid:
                break
        assert mid is not None
        (FIXTURES / "pattern_mid.json").write_text(
            json.dumps(mid, indent=1, sort_keys=True) + "\n"
        )
        print(f"  frontend/tests/fixtures/pattern_mid.json (id {mid['id']})")


if __name__ == "__main__":
    main()
