"""Drive the HTTP session API in-process: create, fire, undo, artifacts.

The same endpoints serve the browser board; `kostant serve` runs them on
a real socket.
"""

from fastapi.testclient import TestClient

from kostant.service import create_app

client = TestClient(create_app())

created = client.post(
    "/v1/sessions", json={"diagram": {"label": "A3"}, "active": [2]}
).json()
sid = created["id"]
print("created session", sid[:8], "state:", created["state"])

for vertex in (2, 1, 3, 2):
    state = client.post(f"/v1/sessions/{sid}/fire", json={"vertex": vertex}).json()
    print(f"fire {vertex}: chips {state['chips']} moods {state['states']}")

print("terminal:", state["terminal"], "word:", state["word"])
print("tableau:", state["tableau"]["rows"])

conflict = client.post(f"/v1/sessions/{sid}/fire", json={"vertex": 1})
print("firing a happy vertex:", conflict.status_code, conflict.json()["detail"])

artifacts = client.get(f"/v1/sessions/{sid}/artifacts").json()
print("element length:", artifacts["element"]["length"])
print("automaton trace:", artifacts["dfa_path"])
print("graph size:", len(artifacts["graph"]["nodes"]))

undone = client.post(f"/v1/sessions/{sid}/undo").json()
print("after undo:", undone["chips"], "word:", undone["word"])

auto = client.post(
    f"/v1/sessions/{sid}/auto", json={"strategy": "lowest", "steps": 99}
).json()
print("auto-play back to terminal:", auto["chips"], auto["terminal"])
