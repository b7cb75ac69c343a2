"""Session-oriented HTTP API for live elicitation of pairwise comparisons.

A session starts as an identity matrix (every off-diagonal comparison
missing). Entries are set one at a time; each accepted mutation writes both
cross-diagonal cells atomically, appends to the session history, and, once
the comparison graph is connected, refreshes the cached inconsistency
report. Sessions live in memory; an optional append-only JSONL file replays
them after a restart.

Endpoints
---------
POST   /sessions                 {labels: [...], gamma?}        -> 201 session
GET    /sessions/{id}                                           -> session state
PUT    /sessions/{id}/entries    {a, b, value}                  -> report or disconnected notice
GET    /sessions/{id}/report     ?k=3&gamma=1                   -> report + top-k (409 if disconnected)
GET    /sessions/{id}/export     ?format=csv|json               -> matrix file
DELETE /sessions/{id}                                           -> 204

Errors are JSON objects {code, message, detail}.
"""

from __future__ import annotations

import json
import math
import secrets
import threading
import time
from pathlib import Path

import numpy as np
from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse, Response

from .errors import PcmError
from .indices import InconsistencyReport, report
from .pcm import connected_components, make_pcm

MAX_ALTERNATIVES = 50
TOP_K_THRESHOLD = 1e-9


class ServiceError(Exception):
    def __init__(self, status: int, code: str, message: str, detail=None):
        self.status = status
        self.code = code
        self.message = message
        self.detail = detail
        super().__init__(message)


class _Session:
    def __init__(self, sid: str, labels: tuple[str, ...], gamma: float):
        self.id = sid
        self.labels = labels
        self.gamma = gamma
        n = len(labels)
        self.entries = np.eye(n)
        self.history: list[dict] = []
        self.report: InconsistencyReport | None = None
        self.lock = threading.Lock()

    @property
    def n(self) -> int:
        return len(self.labels)

    def components(self) -> list[list[str]]:
        return [[self.labels[i] for i in c] for c in connected_components(self.entries > 0)]

    def connected(self) -> bool:
        return len(connected_components(self.entries > 0)) == 1

    def pcm(self):
        return make_pcm(self.entries.copy(), self.labels, check=True)

    def refresh_report(self) -> None:
        self.report = report(self.pcm(), self.gamma) if self.connected() else None


class SessionStore:
    """In-memory session map with optional JSONL write-ahead persistence."""

    def __init__(self, persist_path: str | None = None):
        self._sessions: dict[str, _Session] = {}
        self._lock = threading.Lock()
        self._persist = Path(persist_path) if persist_path else None
        self._file_lock = threading.Lock()
        if self._persist and self._persist.exists():
            self._replay()

    def _append(self, record: dict) -> None:
        if not self._persist:
            return
        with self._file_lock:
            with self._persist.open("a") as fh:
                fh.write(json.dumps(record) + "\n")

    def _replay(self) -> None:
        for line in self._persist.read_text().splitlines():
            if not line.strip():
                continue
            rec = json.loads(line)
            op = rec["op"]
            if op == "create":
                session = _Session(rec["id"], tuple(rec["labels"]), rec["gamma"])
                self._sessions[session.id] = session
            elif op == "set":
                session = self._sessions.get(rec["id"])
                if session is not None:
                    _apply_entry(session, rec["a"], rec["b"], rec["new"], ts=rec["ts"])
            elif op == "delete":
                self._sessions.pop(rec["id"], None)
        for session in self._sessions.values():
            session.refresh_report()

    def create(self, labels: list[str], gamma: float) -> _Session:
        if not 2 <= len(labels) <= MAX_ALTERNATIVES:
            raise ServiceError(400, "bad-size", f"need between 2 and {MAX_ALTERNATIVES} labels")
        if len(set(labels)) != len(labels):
            raise ServiceError(400, "duplicate-labels", "labels must be unique")
        if not math.isfinite(gamma):
            raise ServiceError(400, "bad-gamma", "gamma must be finite")
        session = _Session(secrets.token_hex(8), tuple(str(x) for x in labels), float(gamma))
        with self._lock:
            self._sessions[session.id] = session
        self._append({"op": "create", "id": session.id, "labels": list(session.labels),
                      "gamma": session.gamma, "ts": time.time()})
        return session

    def get(self, sid: str) -> _Session:
        with self._lock:
            session = self._sessions.get(sid)
        if session is None:
            raise ServiceError(404, "unknown-session", f"no session {sid!r}")
        return session

    def delete(self, sid: str) -> None:
        with self._lock:
            if sid not in self._sessions:
                raise ServiceError(404, "unknown-session", f"no session {sid!r}")
            del self._sessions[sid]
        self._append({"op": "delete", "id": sid, "ts": time.time()})

    def record_set(self, session: _Session, a: int, b: int, old: float, new: float, ts: float) -> None:
        self._append({"op": "set", "id": session.id, "a": a, "b": b,
                      "old": old, "new": new, "ts": ts})


def _apply_entry(session: _Session, a: int, b: int, value: float, ts: float) -> float:
    old = float(session.entries[a, b])
    session.entries[a, b] = value
    session.entries[b, a] = 1.0 / value if value > 0 else 0.0
    session.history.append({"ts": ts, "a": a, "b": b, "old": old, "new": value})
    return old


def _resolve_index(session: _Session, token) -> int:
    if isinstance(token, str):
        if token in session.labels:
            return session.labels.index(token)
        raise ServiceError(400, "unknown-label", f"no alternative {token!r}")
    idx = int(token)
    if not 0 <= idx < session.n:
        raise ServiceError(400, "bad-index", f"index {idx} out of range for {session.n} alternatives")
    return idx


def _report_payload(rep: InconsistencyReport, k: int) -> dict:
    body = rep.to_dict()
    top = sorted(
        (c for c in body["perComparison"] if c["value"] > TOP_K_THRESHOLD),
        key=lambda c: -c["value"],
    )
    body["topComparisons"] = top[:k]
    return body


def create_app(persist_path: str | None = None) -> FastAPI:
    app = FastAPI(title="pcmentropy elicitation service")
    # desk-scale tool without authentication; the browser console may be
    # served from a different local port
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    store = SessionStore(persist_path)
    app.state.store = store

    @app.exception_handler(ServiceError)
    async def _service_error(_req: Request, exc: ServiceError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message, "detail": exc.detail},
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_req: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"code": "invalid-request", "message": "malformed request body",
                     "detail": exc.errors()},
        )

    @app.exception_handler(PcmError)
    async def _pcm_error(_req: Request, exc: PcmError):
        return JSONResponse(
            status_code=400,
            content={"code": "invalid-matrix", "message": str(exc), "detail": None},
        )

    def _session_state(session: _Session) -> dict:
        return {
            "id": session.id,
            "labels": list(session.labels),
            "gamma": session.gamma,
            "entries": [[float(v) for v in row] for row in session.entries],
            "connected": session.connected(),
            "history": list(session.history),
            "historyLength": len(session.history),
        }

    @app.post("/sessions", status_code=201)
    def create_session(body: dict):
        labels = body.get("labels")
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise ServiceError(400, "bad-labels", "body must carry a list of string labels")
        session = store.create(labels, body.get("gamma", 1.0))
        return _session_state(session)

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        session = store.get(sid)
        with session.lock:
            return _session_state(session)

    @app.put("/sessions/{sid}/entries")
    def set_entry(sid: str, body: dict):
        session = store.get(sid)
        if "a" not in body or "b" not in body or "value" not in body:
            raise ServiceError(400, "missing-field", "body needs a, b, and value")
        with session.lock:
            a = _resolve_index(session, body["a"])
            b = _resolve_index(session, body["b"])
            if a == b:
                raise ServiceError(400, "diagonal", "cannot compare an alternative with itself")
            try:
                value = float(body["value"])
            except (TypeError, ValueError):
                raise ServiceError(400, "bad-value", "value must be a number") from None
            if not math.isfinite(value) or value < 0:
                raise ServiceError(400, "bad-value", "value must be positive, or 0 to retract")
            if value > 0 and not math.isfinite(1.0 / value):
                raise ServiceError(400, "bad-value", "value too small: its reciprocal overflows")
            ts = time.time()
            old = _apply_entry(session, a, b, value, ts)
            store.record_set(session, a, b, old, value, ts)
            session.refresh_report()
            if session.report is None:
                return {"connected": False, "report": None, "components": session.components()}
            return {"connected": True, "report": session.report.to_dict(), "components": None}

    @app.get("/sessions/{sid}/report")
    def get_report(sid: str, k: int = 3, gamma: float | None = None):
        session = store.get(sid)
        with session.lock:
            if not session.connected():
                raise ServiceError(
                    409, "disconnected",
                    "comparison graph is not connected yet",
                    detail={"components": session.components()},
                )
            if gamma is None or gamma == session.gamma:
                rep = session.report
            else:
                if not math.isfinite(gamma):
                    raise ServiceError(400, "bad-gamma", "gamma must be finite")
                rep = report(session.pcm(), gamma)
            return _report_payload(rep, k)

    @app.get("/sessions/{sid}/export")
    def export_session(sid: str, format: str = "csv"):
        session = store.get(sid)
        with session.lock:
            pcm = session.pcm()
        if format == "csv":
            return PlainTextResponse(pcm.to_csv(), media_type="text/csv")
        if format == "json":
            return Response(pcm.to_json(), media_type="application/json")
        raise ServiceError(400, "bad-format", f"unknown export format {format!r}")

    @app.delete("/sessions/{sid}", status_code=204)
    def delete_session(sid: str):
        store.delete(sid)
        return Response(status_code=204)

    return app
