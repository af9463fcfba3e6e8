"""HTTP session server for live human-vs-engine play.

Protocol (JSON bodies):
  POST /sessions {red, blue, human_role, engine, params, seed} -> {id, state}
  GET  /sessions/{id} -> state
  POST /sessions/{id}/move  painter: {"color": "r"|"b"}
                            builder: {"u_rank", "v_rank", "place"}
  GET  /sessions/{id}/events -> server-sent events, one JSON state per turn

A state is the transcript schema extended with the pending edge, whose
side is to move, and the closed-form bound reports for the target pair.
Out-of-turn or malformed moves leave the session unchanged.
"""

from __future__ import annotations

import asyncio
import itertools
import json
import uuid
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import StreamingResponse

from .board import COLORS, GameError, GameState, PendingMove
from .bounds import applicable_bounds
from .graphs import GraphSpecError, parse_graph_spec
from .strategies import StrategyError, make_builder, make_painter


@dataclass
class Session:
    session_id: str
    red_spec: str
    blue_spec: str
    human_role: str  # "builder" | "painter"
    engine_name: str
    seed: Optional[int]
    state: GameState
    engine: object
    pending_token: Optional[PendingMove] = None
    events: list[dict] = field(default_factory=list)
    bounds: list[dict] = field(default_factory=list)
    lock: asyncio.Lock = field(default_factory=asyncio.Lock)

    def snapshot(self) -> dict:
        state = self.state
        moves = [[state.rank(e.u), state.rank(e.v), e.color] for e in state.edges]
        pending = None
        if self.pending_token is not None:
            pending = [state.rank(self.pending_token.u),
                       state.rank(self.pending_token.v)]
        if state.win is not None:
            to_move = None
        elif self.human_role == "painter":
            to_move = "human" if pending is not None else "engine"
        else:
            to_move = "engine" if pending is not None else "human"
        return {
            "red": self.red_spec,
            "blue": self.blue_spec,
            "seed": self.seed,
            "moves": moves,
            "winner": state.win.color if state.win else None,
            "turns": state.turns,
            "witness": list(state.win.witness.map) if state.win else None,
            "pending": pending,
            "to_move": to_move,
            "bounds": self.bounds,
        }

    def record_event(self):
        self.events.append(self.snapshot())


def create_app() -> FastAPI:
    app = FastAPI(title="ordered-ramsey session server")
    sessions: dict[str, Session] = {}

    def get_session(session_id: str) -> Session:
        sess = sessions.get(session_id)
        if sess is None:
            raise HTTPException(status_code=404, detail="unknown session id")
        return sess

    def engine_propose(sess: Session):
        """Engine builder picks its next edge; no-op if the game is over."""
        if sess.state.win is not None or sess.human_role != "painter":
            return
        move = sess.engine.next_move(sess.state)
        if sess.state.win is not None:
            return
        sess.pending_token = sess.state.propose_edge(*move)

    @app.post("/sessions")
    async def create_session(request: Request):
        body = await request.json()
        try:
            red_spec = body["red"]
            blue_spec = body["blue"]
            human_role = body["human_role"]
            engine_name = body["engine"]
        except (KeyError, TypeError) as exc:
            raise HTTPException(status_code=422, detail=f"missing field: {exc}")
        params = body.get("params") or {}
        seed = body.get("seed")
        if human_role not in ("builder", "painter"):
            raise HTTPException(status_code=422,
                                detail="human_role must be builder or painter")
        try:
            red = parse_graph_spec(red_spec)
            blue = parse_graph_spec(blue_spec)
            if human_role == "painter":
                engine = make_builder(engine_name, red, blue, seed=seed,
                                      board=params.get("board"), params=params)
            else:
                engine = make_painter(engine_name, seed=seed,
                                      budget=params.get("budget"))
        except GraphSpecError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        state = GameState(red, blue)
        sess = Session(
            session_id=uuid.uuid4().hex,
            red_spec=red_spec,
            blue_spec=blue_spec,
            human_role=human_role,
            engine_name=engine_name,
            seed=seed,
            state=state,
            engine=engine,
            bounds=[b.as_dict() for b in applicable_bounds(red, blue)],
        )
        try:
            engine_propose(sess)
        except (GameError, StrategyError) as exc:
            raise HTTPException(status_code=500, detail=f"engine error: {exc}")
        sessions[sess.session_id] = sess
        sess.record_event()
        return {"id": sess.session_id, "state": sess.snapshot()}

    @app.get("/sessions/{session_id}")
    async def get_state(session_id: str):
        return get_session(session_id).snapshot()

    @app.post("/sessions/{session_id}/move")
    async def post_move(session_id: str, request: Request):
        sess = get_session(session_id)
        body = await request.json()
        async with sess.lock:
            if sess.state.win is not None:
                raise HTTPException(status_code=409, detail="game already over")
            if sess.human_role == "painter":
                _human_paint(sess, body)
                engine_propose(sess)
            else:
                _human_build(sess, body)
            sess.record_event()
            return sess.snapshot()

    def _human_paint(sess: Session, body: dict):
        if sess.pending_token is None:
            raise HTTPException(status_code=409, detail="no pending edge to color")
        color = body.get("color")
        if color not in COLORS:
            raise HTTPException(status_code=422, detail="color must be 'r' or 'b'")
        token, sess.pending_token = sess.pending_token, None
        sess.state.paint(token, color)

    def _human_build(sess: Session, body: dict):
        if sess.pending_token is not None:
            raise HTTPException(status_code=409, detail="engine still to color")
        try:
            u_rank = int(body["u_rank"])
            v_rank = int(body["v_rank"])
            place = body.get("place", "right")
        except (KeyError, TypeError, ValueError):
            raise HTTPException(status_code=422,
                                detail="builder move needs u_rank and v_rank")
        state = sess.state
        try:
            if place == "right":
                while state.num_vertices < max(u_rank, v_rank):
                    state.new_vertex("rightmost")
            elif place == "between":
                # The new vertex becomes v_rank in the post-insertion order.
                if not 2 <= v_rank <= state.num_vertices:
                    raise HTTPException(status_code=422,
                                        detail="between needs 2 <= v_rank <= n")
                state.new_vertex("between", state.handle_at_rank(v_rank - 1),
                                 state.handle_at_rank(v_rank))
            else:
                raise HTTPException(status_code=422,
                                    detail="place must be 'right' or 'between'")
            if state.win is not None:
                return
            token = state.propose_edge(state.handle_at_rank(u_rank),
                                       state.handle_at_rank(v_rank))
        except GameError as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        color = sess.engine.choose_color(state, (token.u, token.v))
        state.paint(token, color)

    @app.get("/sessions/{session_id}/events")
    async def events(session_id: str):
        sess = get_session(session_id)

        async def stream():
            for index in itertools.count():
                while index >= len(sess.events):
                    if sess.state.win is not None and index >= len(sess.events):
                        return
                    await asyncio.sleep(0.05)
                yield f"data: {json.dumps(sess.events[index])}\n\n"

        return StreamingResponse(stream(), media_type="text/event-stream")

    return app
