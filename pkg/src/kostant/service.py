"""Stateful HTTP sessions for interactive play.

A session owns one game and a history stack; clients create a session,
inspect per-vertex moods, fire vertices, undo, and ask for the
artifacts the play has built up (word, group element, automaton trace,
tableau, graph).  Sessions are in-memory with idle eviction, addressed
by unguessable tokens, and mutations on one session are serialized.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from .automaton import build_dfa
from .diagram import DiagramError, DynkinDiagram, catalog_diagram, diagram_from_json
from .game import (
    GameSpec,
    GraphTooLargeError,
    IllegalMoveError,
    PlayResult,
    classical_game,
    fire,
    modified_game,
    play,
    reachable_graph,
    sad_vertices,
    vertex_state,
    word_of,
)
from .tableaux import fill_tableau

__all__ = ["create_app", "SessionStore"]

MAX_CATALOG_RANK = 8
ARTIFACT_NODE_CAP = 5_000


class EdgeModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)
    from_: int = Field(alias="from")
    to: int
    arrows: int = 1


class DiagramModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    label: Optional[str] = None
    n: Optional[int] = None
    edges: Optional[list[EdgeModel]] = None

    def build(self) -> DynkinDiagram:
        if self.n is None and self.edges is None:
            if not self.label:
                raise DiagramError("diagram needs a catalog label or n/edges")
            family, rank = self.label[0], self.label[1:]
            if not rank.isdigit():
                raise DiagramError(f"cannot parse catalog label {self.label!r}")
            return catalog_diagram(family, int(rank))
        if self.n is None:
            raise DiagramError("custom diagram needs a vertex count n")
        return diagram_from_json(
            {
                "n": self.n,
                "edges": [e.model_dump(by_alias=True) for e in self.edges or []],
                "label": self.label or "custom",
            }
        )


class SessionSpecModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    diagram: DiagramModel
    mode: Literal["modified", "classical"] = "modified"
    active: Optional[list[int]] = None
    initial: Optional[list[int]] = None
    step_cap: int = 10_000

    def build(self) -> GameSpec:
        diagram = self.diagram.build()
        if self.mode == "modified":
            return modified_game(diagram, self.active or (), self.step_cap)
        return classical_game(diagram, tuple(self.initial or ()), self.step_cap)


class FireModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    vertex: int


class AutoModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    strategy: Literal["lowest", "highest", "random"] = "lowest"
    steps: int = Field(ge=0)
    seed: int = 0


@dataclass
class Session:
    id: str
    spec: GameSpec
    history: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    current: tuple[int, ...] = ()
    created: float = 0.0
    last_used: float = 0.0
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def moves(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.history)


def _is_single_source_path(spec: GameSpec) -> bool:
    """Type-A game with one source: a simply-laced path numbered in order."""
    if spec.mode != "modified" or len(spec.active) != 1:
        return False
    d = spec.diagram
    expected = [(i, i + 1) for i in range(1, d.n)]
    if list(d.edge_pairs()) != expected:
        return False
    return all(
        d.arrows(u, v) == 1 and d.arrows(v, u) == 1 for u, v in expected
    )


class SessionStore:
    def __init__(self, idle_timeout: float = 3600.0, log_path: str | None = None):
        self.idle_timeout = idle_timeout
        self.log_path = log_path
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def _log(self, event: dict) -> None:
        if self.log_path is None:
            return
        with open(self.log_path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(event, sort_keys=True) + "\n")

    def _evict_idle(self, now: float) -> None:
        dead = [
            sid
            for sid, s in self._sessions.items()
            if now - s.last_used > self.idle_timeout
        ]
        for sid in dead:
            del self._sessions[sid]

    def create(self, spec: GameSpec) -> Session:
        now = time.time()
        session = Session(
            id=secrets.token_hex(16),
            spec=spec,
            current=spec.start,
            created=now,
            last_used=now,
        )
        with self._lock:
            self._evict_idle(now)
            self._sessions[session.id] = session
        self._log({"event": "create", "id": session.id, "spec": spec.to_json_dict()})
        return session

    def get(self, sid: str) -> Session:
        now = time.time()
        with self._lock:
            self._evict_idle(now)
            session = self._sessions.get(sid)
        if session is None:
            raise HTTPException(status_code=404, detail=f"no session {sid}")
        session.last_used = now
        return session


def _state_view(session: Session, diverging: bool = False) -> dict:
    spec = session.spec
    c = session.current
    states = [vertex_state(c, spec, v).value for v in spec.diagram.vertices()]
    terminal = "sad" not in states
    view: dict = {
        "chips": list(c),
        "states": states,
        "word": list(session.moves),
        "element_length": len(session.history),
        "terminal": terminal,
    }
    if diverging:
        view["diverging"] = True
    if _is_single_source_path(spec):
        (k,) = spec.active
        tableau = fill_tableau(session.moves, spec.diagram.n + 1, k)
        view["tableau"] = tableau.to_json_dict()
    return view


def create_app(
    idle_timeout: float = 3600.0,
    log_path: str | None = None,
    static_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="kostant game sessions", version="1")
    store = SessionStore(idle_timeout=idle_timeout, log_path=log_path)
    app.state.store = store

    @app.get("/v1/catalog")
    def catalog() -> dict:
        families = [
            {"family": "A", "ranks": list(range(1, MAX_CATALOG_RANK + 1))},
            {"family": "B", "ranks": list(range(2, MAX_CATALOG_RANK + 1))},
            {"family": "C", "ranks": list(range(2, MAX_CATALOG_RANK + 1))},
            {"family": "D", "ranks": list(range(4, MAX_CATALOG_RANK + 1))},
            {"family": "E", "ranks": [6, 7, 8]},
            {"family": "F", "ranks": [4]},
            {"family": "G", "ranks": [2]},
        ]
        return {"families": families}

    @app.post("/v1/sessions", status_code=201)
    def create_session(body: SessionSpecModel) -> dict:
        try:
            spec = body.build()
        except (DiagramError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        session = store.create(spec)
        return {"id": session.id, "state": _state_view(session)}

    @app.get("/v1/sessions/{sid}")
    def get_session(sid: str) -> dict:
        session = store.get(sid)
        with session.lock:
            return _state_view(session)

    @app.post("/v1/sessions/{sid}/fire")
    def fire_vertex(sid: str, body: FireModel) -> dict:
        session = store.get(sid)
        with session.lock:
            spec = session.spec
            v = body.vertex
            if not 1 <= v <= spec.diagram.n:
                raise HTTPException(
                    status_code=400, detail=f"vertex {v} out of range"
                )
            try:
                nxt = fire(session.current, spec, v)
            except IllegalMoveError as exc:
                raise HTTPException(
                    status_code=409,
                    detail=f"vertex {v} is {exc.state.value}, not sad",
                ) from exc
            session.history.append((session.current, v))
            session.current = nxt
            store._log({"event": "fire", "id": sid, "vertex": v})
            return _state_view(session)

    @app.post("/v1/sessions/{sid}/undo")
    def undo(sid: str) -> dict:
        session = store.get(sid)
        with session.lock:
            if not session.history:
                raise HTTPException(status_code=409, detail="nothing to undo")
            previous, _ = session.history.pop()
            session.current = previous
            store._log({"event": "undo", "id": sid})
            return _state_view(session)

    @app.post("/v1/sessions/{sid}/auto")
    def auto(sid: str, body: AutoModel) -> dict:
        session = store.get(sid)
        with session.lock:
            spec = session.spec
            made = 0
            result: PlayResult | None = None
            import random as _random

            rng = _random.Random(body.seed)
            while made < body.steps:
                sad = sad_vertices(session.current, spec)
                if not sad:
                    break
                if body.strategy == "lowest":
                    v = sad[0]
                elif body.strategy == "highest":
                    v = sad[-1]
                else:
                    v = rng.choice(sad)
                nxt = fire(session.current, spec, v)
                session.history.append((session.current, v))
                session.current = nxt
                made += 1
            store._log(
                {"event": "auto", "id": sid, "strategy": body.strategy, "steps": made}
            )
            still_sad = bool(sad_vertices(session.current, spec))
            diverging = body.steps > 0 and made == body.steps and still_sad
            return _state_view(session, diverging=diverging)

    @app.get("/v1/sessions/{sid}/artifacts")
    def artifacts(sid: str) -> dict:
        session = store.get(sid)
        with session.lock:
            spec = session.spec
            moves = session.moves
            out: dict = {
                "word": list(moves),
                "element": None,
                "dfa_path": None,
                "tableau": None,
                "graph": None,
            }
            crystallographic = spec.diagram.is_crystallographic
            if crystallographic and spec.mode == "modified":
                element = word_of(moves, spec)
                out["element"] = element.to_json_dict()
                dfa = build_dfa(
                    spec.diagram, spec.active, node_cap=ARTIFACT_NODE_CAP
                )
                out["dfa_path"] = [dfa.labels[s] for s in dfa.run(moves)]
            if _is_single_source_path(spec):
                (k,) = spec.active
                tableau = fill_tableau(moves, spec.diagram.n + 1, k)
                out["tableau"] = tableau.to_json_dict()
            try:
                graph = reachable_graph(spec, node_cap=ARTIFACT_NODE_CAP)
                out["graph"] = graph.to_json_dict()
            except GraphTooLargeError:
                pass
            return out

    if static_dir is not None:
        from starlette.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
