"""On-disk session store: one append-only JSON-lines event log per session."""

from __future__ import annotations

import json
import os
import re
import threading
from typing import Optional

from .dialog import DialogState, TurnRecord

_SAFE_ID = re.compile(r"^[A-Za-z0-9_-]+$")


class SessionStore:
    """Replayable per-session event logs; operations on one session serialize."""

    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    def lock(self, session_id: str) -> threading.Lock:
        with self._guard:
            if session_id not in self._locks:
                self._locks[session_id] = threading.Lock()
            return self._locks[session_id]

    def _path(self, session_id: str) -> str:
        if not _SAFE_ID.match(session_id):
            raise ValueError(f"invalid session id: {session_id!r}")
        return os.path.join(self.directory, f"{session_id}.jsonl")

    def _append(self, session_id: str, event: dict) -> None:
        with open(self._path(session_id), "a", encoding="utf-8") as fh:
            fh.write(json.dumps(event, sort_keys=True) + "\n")

    def create(self, session_id: str, user: str) -> DialogState:
        self._append(session_id, {"type": "created", "user": user})
        return DialogState(session_id=session_id, user=user)

    def record_turn(
        self,
        state: DialogState,
        utterance: str,
        topic: str,
        chosen: Optional[str],
        reply: str,
        new_facts: list[str],
        path: Optional[list] = None,
    ) -> None:
        self._append(
            state.session_id,
            {
                "type": "turn",
                "utterance": utterance,
                "topic": topic,
                "chosen": chosen,
                "reply": reply,
                "facts": new_facts,
                "path": path or [],
            },
        )

    def exists(self, session_id: str) -> bool:
        try:
            return os.path.exists(self._path(session_id))
        except ValueError:
            return False

    def load(self, session_id: str) -> Optional[DialogState]:
        path = self._path(session_id)
        if not os.path.exists(path):
            return None
        state: Optional[DialogState] = None
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                event = json.loads(line)
                if event["type"] == "created":
                    state = DialogState(session_id=session_id, user=event["user"])
                elif event["type"] == "turn" and state is not None:
                    for fact in event.get("facts", []):
                        state.add_fact(fact)
                    state.turns.append(
                        TurnRecord(
                            utterance=event["utterance"],
                            topic=event["topic"],
                            chosen=event["chosen"],
                            reply=event["reply"],
                            path=event.get("path", []),
                        )
                    )
        return state
