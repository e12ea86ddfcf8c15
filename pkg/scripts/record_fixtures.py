"""Record real /v1 wire traffic into frontend test fixtures.

Plays the scripted board flows against the in-process service and writes
each exchange (method, path, body, status, response) in order, so the
browser tests replay genuine server behavior without running Python.
"""

from __future__ import annotations

import json
import pathlib
import sys

from fastapi.testclient import TestClient

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from kostant.service import create_app  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parents[1] / "frontend" / "fixtures"


class Recorder:
    def __init__(self):
        self.client = TestClient(create_app())
        self.exchanges: list[dict] = []

    def call(self, method: str, path: str, body: dict | None = None):
        if method == "GET":
            response = self.client.get(path)
        else:
            response = self.client.post(path, json=body)
        self.exchanges.append(
            {
                "method": method,
                "path": path,
                "body": body,
                "status": response.status_code,
                "response": response.json(),
            }
        )
        return response.json()

    def dump(self, name: str) -> None:
        OUT.mkdir(parents=True, exist_ok=True)
        target = OUT / f"{name}.json"
        target.write_text(json.dumps(self.exchanges, indent=2, sort_keys=True))
        print(f"wrote {target} ({len(self.exchanges)} exchanges)")


def record_a3_flow() -> None:
    r = Recorder()
    created = r.call(
        "POST", "/v1/sessions", {"diagram": {"label": "A3"}, "active": [2]}
    )
    sid = created["id"]
    for vertex in (2, 1, 3, 2):
        r.call("POST", f"/v1/sessions/{sid}/fire", {"vertex": vertex})
    # terminal: vertex 1 is happy now; the conflict is part of the fixture
    r.call("POST", f"/v1/sessions/{sid}/fire", {"vertex": 1})
    r.call("POST", f"/v1/sessions/{sid}/undo", {})
    r.call(
        "POST",
        f"/v1/sessions/{sid}/auto",
        {"strategy": "lowest", "steps": 1000, "seed": 0},
    )
    r.dump("a3_middle_flow")


def record_f4_board() -> None:
    r = Recorder()
    r.call(
        "POST",
        "/v1/sessions",
        {"diagram": {"label": "F4"}, "active": [1, 2, 3, 4]},
    )
    r.dump("f4_board")


def record_catalog() -> None:
    r = Recorder()
    r.call("GET", "/v1/catalog")
    r.dump("catalog")


if __name__ == "__main__":
    record_a3_flow()
    record_f4_board()
    record_catalog()
