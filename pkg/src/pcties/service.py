"""Incremental elicitation service: record comparisons, get live analysis.

Sessions hold a partial judgment map over unordered pairs. Every mutation
bumps the session revision and returns a fresh analysis of the triads whose
three pairs are all judged. The generalized consistency coefficient and the
absolute index appear only once the session is complete; partially judged
sessions get the raw inconsistent/completed ratio, never a number the
underlying theory does not define.

Pairs cross the API 1-based ([1, n]); internally everything is 0-based.
Verdicts: "first" (the pair's first vertex wins), "second", "tie".

An optional append-only JSONL event log replays on startup, giving
desk-scale durability without a database.
"""

from __future__ import annotations

import itertools
import json
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from math import comb
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .core import TriadClass, _classify_rel, validate_matrix
from .errors import TooSmall
from .indices import analyze

__all__ = ["create_app", "SessionStore", "ApiError"]

MAX_LABELS = 50
MIN_LABELS = 2

_VERDICT_VALUES = {"first": 1, "second": -1, "tie": 0}


class ApiError(Exception):
    def __init__(self, status: int, code: str, detail: str) -> None:
        self.status = status
        self.code = code
        self.detail = detail
        super().__init__(detail)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class Session:
    id: str
    labels: list[str]
    comparisons: dict[tuple[int, int], int] = field(default_factory=dict)
    created: str = field(default_factory=_now)
    updated: str = field(default_factory=_now)
    revision: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def complete(self) -> bool:
        return len(self.comparisons) == comb(self.n, 2)


def _analysis_doc(session: Session) -> dict:
    """Rolling triad analysis over the pairs judged so far."""
    n = session.n
    rel = session.comparisons
    census = dict.fromkeys([c.value for c in TriadClass], 0)
    inconsistent = []
    completed = 0
    for i, j, k in itertools.combinations(range(n), 3):
        if (i, j) in rel and (i, k) in rel and (j, k) in rel:
            completed += 1
            cls = _classify_rel(rel[(i, j)], rel[(i, k)], rel[(j, k)])
            census[cls.value] += 1
            if cls.is_inconsistent:
                inconsistent.append({"triad": [i + 1, j + 1, k + 1], "class": cls.value})
    ratio = Fraction(len(inconsistent), max(1, completed))
    doc = {
        "n": n,
        "labels": session.labels,
        "pairs_judged": len(rel),
        "pairs_total": comb(n, 2),
        "completed_triads": completed,
        "total_triads": comb(n, 3),
        "census": census,
        "inconsistent": inconsistent,
        "inconsistent_count": len(inconsistent),
        "partial_ratio": float(ratio),
        "partial_ratio_exact": str(ratio),
        "complete": session.complete,
        "zeta_g": None,
        "zeta_g_exact": None,
        "eta": None,
        "eta_exact": None,
        "suggestion": _suggest(session),
        "revision": session.revision,
    }
    if session.complete:
        try:
            report = analyze(_assemble_matrix(session), force_ties_denominator=True)
        except TooSmall:
            pass  # n == 2: no triads, indices undefined; leave nulls
        else:
            doc["zeta_g"] = float(report.zeta_value)
            doc["zeta_g_exact"] = str(report.zeta_value)
            doc["eta"] = float(report.eta)
            doc["eta_exact"] = str(report.eta)
    return doc


def _assemble_matrix(session: Session):
    n = session.n
    rows = [[0] * n for _ in range(n)]
    for (i, j), v in session.comparisons.items():
        rows[i][j] = v
        rows[j][i] = -v
    return validate_matrix(rows)


def _suggest(session: Session) -> list[int] | None:
    """Unjudged pair completing the most 2/3-judged triads; ties go to the
    lexicographically first pair. None once every pair is judged. Heuristic
    ordering only, not part of the underlying theory."""
    n = session.n
    rel = session.comparisons
    best_pair = None
    best_score = -1
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in rel:
                continue
            score = sum(
                1
                for k in range(n)
                if k != i and k != j
                and (min(i, k), max(i, k)) in rel
                and (min(j, k), max(j, k)) in rel
            )
            if score > best_score:
                best_pair, best_score = (i, j), score
    if best_pair is None:
        return None
    return [best_pair[0] + 1, best_pair[1] + 1]


class SessionStore:
    """In-memory sessions with optional JSONL persistence.

    Mutations to one session serialize on its lock; distinct sessions do
    not contend. The event log is replayed at construction when present.
    """

    def __init__(self, session_log: str | Path | None = None) -> None:
        self._sessions: dict[str, Session] = {}
        self._dict_lock = threading.Lock()
        self._log_path = Path(session_log) if session_log else None
        self._log_lock = threading.Lock()
        if self._log_path and self._log_path.exists():
            self._replay()

    def _replay(self) -> None:
        for line in self._log_path.read_text().splitlines():
            if not line.strip():
                continue
            event = json.loads(line)
            if event["event"] == "create":
                session = Session(id=event["id"], labels=event["labels"])
                session.created = event["ts"]
                session.updated = event["ts"]
                self._sessions[session.id] = session
            elif event["event"] == "record":
                session = self._sessions[event["id"]]
                i, j = event["pair"]
                self._apply(session, i - 1, j - 1, event["value"], ts=event["ts"])

    def _append_log(self, event: dict) -> None:
        if self._log_path is None:
            return
        with self._log_lock:
            with open(self._log_path, "a") as fp:
                fp.write(json.dumps(event, sort_keys=True) + "\n")

    def create(self, labels: list[str]) -> Session:
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise ApiError(422, "validation", "labels must be a list of strings")
        labels = [x.strip() for x in labels]
        if any(not x for x in labels):
            raise ApiError(422, "validation", "labels must be non-empty strings")
        if not MIN_LABELS <= len(labels) <= MAX_LABELS:
            raise ApiError(
                422, "validation", f"need between {MIN_LABELS} and {MAX_LABELS} labels"
            )
        if len(set(labels)) != len(labels):
            raise ApiError(422, "validation", "labels must be unique")
        session = Session(id=uuid.uuid4().hex, labels=labels)
        with self._dict_lock:
            self._sessions[session.id] = session
        self._append_log(
            {"event": "create", "id": session.id, "labels": labels, "ts": session.created}
        )
        return session

    def get(self, session_id: str) -> Session:
        with self._dict_lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise ApiError(404, "not_found", f"no session {session_id!r}")
        return session

    @staticmethod
    def _apply(session: Session, i: int, j: int, value: int, ts: str | None = None) -> None:
        """Store a judgment; (i, j) 0-based, value from i's perspective."""
        if i > j:
            i, j = j, i
            value = -value
        session.comparisons[(i, j)] = value
        session.revision += 1
        session.updated = ts or _now()

    def record(self, session_id: str, pair: list[int], verdict: str) -> dict:
        session = self.get(session_id)
        if verdict not in _VERDICT_VALUES:
            raise ApiError(422, "validation", f"verdict must be one of {sorted(_VERDICT_VALUES)}")
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(v, int) for v in pair)
        ):
            raise ApiError(422, "validation", "pair must be two 1-based vertex indices")
        a, b = pair
        if not (1 <= a <= session.n and 1 <= b <= session.n) or a == b:
            raise ApiError(422, "validation", f"pair {pair} invalid for n={session.n}")
        with session.lock:
            before = {tuple(t["triad"]) for t in _analysis_doc(session)["inconsistent"]}
            # the verdict is from the perspective of the pair as sent
            self._apply(session, a - 1, b - 1, _VERDICT_VALUES[verdict])
            doc = _analysis_doc(session)
            doc["newly_inconsistent"] = [
                t for t in doc["inconsistent"] if tuple(t["triad"]) not in before
            ]
            i, j = min(a, b) - 1, max(a, b) - 1
            self._append_log(
                {
                    "event": "record",
                    "id": session.id,
                    "pair": [i + 1, j + 1],
                    "value": session.comparisons[(i, j)],
                    "ts": session.updated,
                }
            )
            return doc

    def analysis(self, session_id: str) -> dict:
        session = self.get(session_id)
        with session.lock:
            return _analysis_doc(session)

    def matrix(self, session_id: str) -> dict:
        session = self.get(session_id)
        with session.lock:
            n = session.n
            rows: list[list[int | None]] = [
                [0 if i == j else None for j in range(n)] for i in range(n)
            ]
            for (i, j), v in session.comparisons.items():
                rows[i][j] = v
                rows[j][i] = -v
            return {
                "n": n,
                "labels": session.labels,
                "matrix": rows,
                "revision": session.revision,
            }

    def session_doc(self, session: Session) -> dict:
        with session.lock:
            return {
                "id": session.id,
                "labels": session.labels,
                "n": session.n,
                "pairs_judged": len(session.comparisons),
                "pairs_total": comb(session.n, 2),
                "complete": session.complete,
                "created": session.created,
                "updated": session.updated,
                "revision": session.revision,
                "suggestion": _suggest(session),
            }


class CreateSessionBody(BaseModel):
    labels: list[str]


class RecordBody(BaseModel):
    pair: list[int]
    verdict: str


def create_app(store: SessionStore | None = None, session_log: str | None = None) -> FastAPI:
    app = FastAPI(title="pcties elicitation service")
    sessions = store or SessionStore(session_log=session_log)
    app.state.store = sessions

    @app.exception_handler(ApiError)
    async def _api_error(_: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content={"error": exc.code, "detail": exc.detail})

    @app.exception_handler(RequestValidationError)
    async def _request_error(_: Request, exc: RequestValidationError):
        return JSONResponse(status_code=422, content={"error": "validation", "detail": str(exc)})

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        session = sessions.create(body.labels)
        return sessions.session_doc(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return sessions.session_doc(sessions.get(session_id))

    @app.post("/sessions/{session_id}/comparisons")
    def record_comparison(session_id: str, body: RecordBody):
        return sessions.record(session_id, body.pair, body.verdict)

    @app.get("/sessions/{session_id}/analysis")
    def get_analysis(session_id: str):
        return sessions.analysis(session_id)

    @app.get("/sessions/{session_id}/suggestion")
    def get_suggestion(session_id: str):
        session = sessions.get(session_id)
        with session.lock:
            return {"pair": _suggest(session), "revision": session.revision}

    @app.get("/sessions/{session_id}/matrix")
    def get_matrix(session_id: str):
        return sessions.matrix(session_id)

    return app
