"""HTTP service hosting the movie socialbot.

Endpoints:
  POST /sessions                     -> {"session_id", "user"}
  POST /sessions/{id}/utterance      -> BotTurn JSON (422 when no intent)
  GET  /sessions/{id}                -> session transcript + facts
  POST /solve                        -> raw solver access

Sessions persist on disk and survive restarts; requests touching the same
session serialize on a per-session lock. The KB is immutable after load.
"""

from __future__ import annotations

import json
import os
import uuid
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import FileResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from ..errors import (
    InvalidProgramError,
    NoIntentError,
    NoModelError,
    NoTalkingPointError,
    OddLoopError,
    ParseError,
    UnknownAtomError,
)
from ..neighborhood import relevant_concepts
from ..parser import parse_program
from ..solver import solve
from . import dialog
from .dialog import DEFAULT_RADIUS, DialogState
from .kb import MovieKB, bundled_kb
from .store import SessionStore

SESSION_DIR_ENV = "DISCASP_SESSION_DIR"


class CreateSessionRequest(BaseModel):
    user: str = "john"
    session_id: Optional[str] = None


class UtteranceRequest(BaseModel):
    text: str
    radius: int = Field(default=DEFAULT_RADIUS, ge=0, le=10)


class SolveRequest(BaseModel):
    program: str
    query: str = ""
    radius: Optional[int] = None


def load_config(path: Optional[str]) -> dict:
    config = {
        "port": 8080,
        "kb_facts": None,
        "kb_rules": None,
        "default_radius": DEFAULT_RADIUS,
        "session_dir": os.environ.get(SESSION_DIR_ENV, "sessions"),
    }
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            config.update(json.load(fh))
    return config


def create_app(
    kb: Optional[MovieKB] = None,
    session_dir: str = "sessions",
    default_radius: int = DEFAULT_RADIUS,
    frontend_dir: Optional[str] = None,
) -> FastAPI:
    import threading

    kb = kb or bundled_kb()
    store = SessionStore(session_dir)
    app = FastAPI(title="movie socialbot", version="0.1.0")
    sessions: dict[str, DialogState] = {}
    sessions_guard = threading.Lock()

    def get_state(session_id: str) -> DialogState:
        with sessions_guard:
            state = sessions.get(session_id)
            if state is None:
                state = store.load(session_id)
                if state is not None:
                    sessions[session_id] = state
        if state is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return state

    @app.post("/sessions")
    def create_session(req: CreateSessionRequest):
        session_id = req.session_id or uuid.uuid4().hex
        try:
            if store.exists(session_id):
                raise HTTPException(status_code=400, detail="session already exists")
            state = store.create(session_id, req.user)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        sessions[session_id] = state
        return {"session_id": session_id, "user": req.user}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        state = get_state(session_id)
        return {
            "session_id": state.session_id,
            "user": state.user,
            "facts": list(state.dynamic_facts),
            "turns": [
                {
                    "utterance": t.utterance,
                    "topic": t.topic,
                    "chosen": t.chosen,
                    "reply": t.reply,
                    "path": t.path,
                }
                for t in state.turns
            ],
        }

    @app.post("/sessions/{session_id}/utterance")
    def utterance(session_id: str, req: UtteranceRequest):
        state = get_state(session_id)
        with store.lock(session_id):
            try:
                topic = dialog.parse_utterance(req.text, kb, state.user)
            except NoIntentError:
                raise HTTPException(
                    status_code=422,
                    detail=(
                        "Sorry, I did not catch a movie or actor I know. "
                        "Try something like 'I like Titanic'."
                    ),
                )
            facts_before = list(state.dynamic_facts)
            try:
                turn = dialog.next_turn(
                    kb, state, topic, radius=req.radius, utterance=req.text
                )
            except NoModelError:
                reply = dialog.no_model_reply(topic)
                state.turns.append(
                    dialog.TurnRecord(
                        utterance=req.text, topic=topic, chosen=None, reply=reply
                    )
                )
                new_facts = [f for f in state.dynamic_facts if f not in facts_before]
                store.record_turn(state, req.text, topic, None, reply, new_facts)
                return {
                    "reply": reply,
                    "topic": topic,
                    "chosen": None,
                    "rcc": None,
                    "path": [],
                }
            except NoTalkingPointError:
                reply = dialog.no_talking_point_reply()
                state.turns.append(
                    dialog.TurnRecord(
                        utterance=req.text, topic=topic, chosen=None, reply=reply
                    )
                )
                new_facts = [f for f in state.dynamic_facts if f not in facts_before]
                store.record_turn(state, req.text, topic, None, reply, new_facts)
                return {
                    "reply": reply,
                    "topic": topic,
                    "chosen": None,
                    "rcc": None,
                    "path": [],
                }
            new_facts = [f for f in state.dynamic_facts if f not in facts_before]
            path_doc = turn.path.to_json_dict() if turn.path else []
            store.record_turn(
                state, req.text, turn.topic, turn.chosen, turn.reply, new_facts,
                path=path_doc,
            )
            return {
                "reply": turn.reply,
                "topic": turn.topic,
                "chosen": turn.chosen,
                "rcc": turn.rcc.to_json_dict(),
                "path": path_doc,
            }

    @app.post("/solve")
    def solve_endpoint(req: SolveRequest):
        try:
            program = parse_program(req.program)
            query = [
                (chunk[4:].strip(), True) if chunk.startswith("not ") else (chunk, False)
                for chunk in (c.strip() for c in req.query.split(","))
                if chunk
            ]
            if req.radius is not None and len(query) == 1 and not query[0][1]:
                result = relevant_concepts(program, query[0][0], req.radius)
                return {"rcc": result.to_json_dict(), "models": [
                    {"true": sorted(result.model.true_atoms),
                     "false": sorted(result.model.false_atoms)}
                ]}
            models = solve(program, query)
            return {
                "models": [
                    {"true": sorted(m.true_atoms), "false": sorted(m.false_atoms)}
                    for m in models
                ]
            }
        except (ParseError, InvalidProgramError, OddLoopError, UnknownAtomError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except NoModelError as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    if frontend_dir and os.path.isdir(frontend_dir):
        index = os.path.join(frontend_dir, "index.html")

        @app.get("/")
        def root():
            return FileResponse(index)

        app.mount("/ui", StaticFiles(directory=frontend_dir), name="ui")

    return app


def main(argv=None) -> int:
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(description="movie socialbot service")
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--port", type=int)
    parser.add_argument("--frontend", help="directory with the web UI build")
    args = parser.parse_args(argv)
    config = load_config(args.config)
    if args.port:
        config["port"] = args.port
    kb = None
    if config.get("kb_facts") and config.get("kb_rules"):
        from .kb import load_kb

        kb = load_kb(config["kb_facts"], config["kb_rules"])
    app = create_app(
        kb=kb,
        session_dir=config["session_dir"],
        default_radius=config["default_radius"],
        frontend_dir=args.frontend,
    )
    uvicorn.run(app, host="127.0.0.1", port=config["port"])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
