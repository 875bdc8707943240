"""JSON-over-HTTP service for playing the Nim engine, backing the web UI.

Endpoints: POST /games, GET /games/{id}, POST /games/{id}/moves,
GET /games/{id}/hint, DELETE /games/{id}. Sessions live in memory, expire
after an idle TTL, and can be persisted to / replayed from a line-delimited
JSON event log; a replayed session serializes bit-identically because all
timestamps come from the log.
"""

from __future__ import annotations

import json
import re
import secrets
import threading
import time
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import nim, representations

HUMAN, ENGINE = "human", "engine"


def canonical_json(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()


@dataclass
class Session:
    id: str
    config: nim.GameConfig
    state: nim.GameState
    engine_player: int  # 0 if the engine moves first
    created_at: float
    updated_at: float
    actors: list[str] = field(default_factory=list)  # actor per history entry
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def actor(self, player: int) -> str:
        return ENGINE if player == self.engine_player else HUMAN

    def to_json(self) -> dict:
        state, config = self.state, self.config
        rep = representations.greedy_q_rep(config.q, state.beans) if state.beans else None
        if state.over:
            status = "engineWon" if state.winner == self.engine_player else "humanWon"
        else:
            status = "playing"
        return {
            "id": self.id,
            "q": config.q,
            "variant": config.variant.value,
            "initialBeans": config.initial_beans,
            "beans": state.beans,
            "lastTake": state.last_take,
            "toMove": None if state.over else self.actor(state.to_move),
            "maxTake": None if state.over else nim.max_take(config, state),
            "status": status,
            "history": [
                {"actor": actor, "take": take}
                for actor, take in zip(self.actors, state.history)
            ],
            "representation": [str(v) for v in rep.summands()] if rep else [],
            "leastSummand": str(rep.least_summand()) if rep and rep.indices else None,
            "createdAt": self.created_at,
            "updatedAt": self.updated_at,
        }


class ApiError(Exception):
    def __init__(self, status: int, message: str, extra: dict | None = None):
        super().__init__(message)
        self.status = status
        self.body = {"error": message, **(extra or {})}


class GameService:
    """Session store plus the request-level game logic; HTTP-free."""

    def __init__(
        self,
        engine_first_default: bool = False,
        ttl_seconds: float = 3600.0,
        persist: str | None = None,
    ):
        self.engine_first_default = engine_first_default
        self.ttl_seconds = ttl_seconds
        self.persist = persist
        self.sessions: dict[str, Session] = {}
        self._store_lock = threading.Lock()
        self._log_lock = threading.Lock()
        if persist:
            self._replay(persist)

    # -- event log ---------------------------------------------------------

    def _log(self, event: dict) -> None:
        if not self.persist:
            return
        with self._log_lock:
            with open(self.persist, "a", encoding="utf-8") as fh:
                fh.write(canonical_json(event).decode() + "\n")

    def _replay(self, path: str) -> None:
        try:
            with open(path, encoding="utf-8") as fh:
                lines = [line for line in fh if line.strip()]
        except FileNotFoundError:
            return
        for line in lines:
            event = json.loads(line)
            sid, kind, ts = event["session"], event["event"], event["ts"]
            if kind == "create":
                config = nim.GameConfig(
                    event["q"], nim.Variant(event["variant"]), event["beans"]
                )
                self.sessions[sid] = Session(
                    id=sid,
                    config=config,
                    state=nim.new_game(config),
                    engine_player=0 if event["engineFirst"] else 1,
                    created_at=ts,
                    updated_at=ts,
                )
            elif kind in ("move", "engine"):
                session = self.sessions.get(sid)
                if session is None:
                    continue
                session.actors.append(session.actor(session.state.to_move))
                session.state = nim.apply_move(session.config, session.state, event["take"])
                session.updated_at = ts
            elif kind == "expire":
                self.sessions.pop(sid, None)

    # -- session access ----------------------------------------------------

    def _get(self, sid: str) -> Session:
        with self._store_lock:
            session = self.sessions.get(sid)
        if session is not None and self.ttl_seconds > 0:
            if time.time() - session.updated_at > self.ttl_seconds:
                self._expire(session, "idle")
                session = None
        if session is None:
            raise ApiError(404, f"no session {sid}")
        return session

    def _expire(self, session: Session, reason: str) -> None:
        with self._store_lock:
            self.sessions.pop(session.id, None)
        self._log({"ts": time.time(), "session": session.id, "event": "expire",
                   "reason": reason})

    def _sweep(self) -> None:
        if self.ttl_seconds <= 0:
            return
        cutoff = time.time() - self.ttl_seconds
        with self._store_lock:
            stale = [s for s in self.sessions.values() if s.updated_at < cutoff]
        for session in stale:
            self._expire(session, "idle")

    # -- endpoints ---------------------------------------------------------

    def create_game(self, payload: dict) -> tuple[int, dict]:
        self._sweep()
        try:
            q = int(payload.get("q", 3))
            beans = int(payload.get("beans", 47))
            variant = nim.Variant(payload.get("variant", "standard"))
            engine_first = bool(payload.get("engineFirst", self.engine_first_default))
            config = nim.GameConfig(q, variant, beans)
        except (TypeError, ValueError) as exc:
            raise ApiError(400, str(exc)) from exc
        now = time.time()
        session = Session(
            id=secrets.token_hex(8),
            config=config,
            state=nim.new_game(config),
            engine_player=0 if engine_first else 1,
            created_at=now,
            updated_at=now,
        )
        with self._store_lock:
            self.sessions[session.id] = session
        self._log({"ts": now, "session": session.id, "event": "create", "q": q,
                   "variant": variant.value, "beans": beans, "engineFirst": engine_first})
        body = None
        if engine_first:
            with session.lock:
                reply = self._engine_step(session)
            body = session.to_json()
            body["engineReply"] = reply
        return 201, body or session.to_json()

    def get_game(self, sid: str) -> tuple[int, dict]:
        return 200, self._get(sid).to_json()

    def move(self, sid: str, payload: dict) -> tuple[int, dict]:
        session = self._get(sid)
        with session.lock:
            state = session.state
            if state.over:
                raise ApiError(409, "game is over", {"maxTake": None})
            if session.actor(state.to_move) != HUMAN:
                raise ApiError(409, "not your turn", {"maxTake": None})
            try:
                take = int(payload["take"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ApiError(400, "body must carry an integer 'take'") from exc
            try:
                session.actors.append(HUMAN)
                session.state = nim.apply_move(session.config, state, take)
            except nim.IllegalMoveError as exc:
                session.actors.pop()
                raise ApiError(409, str(exc), {"maxTake": exc.cap}) from exc
            now = time.time()
            session.updated_at = now
            self._log({"ts": now, "session": sid, "event": "move", "take": take})
            reply = None
            if not session.state.over:
                reply = self._engine_step(session)
            body = session.to_json()
            if reply is not None:
                body["engineReply"] = reply
            return 200, body

    def _engine_step(self, session: Session) -> dict:
        """Engine replies with the least-G-summand strategy (flagged fallback)."""
        move = nim.strategy_move(session.config, session.state)
        session.actors.append(ENGINE)
        session.state = nim.apply_move(session.config, session.state, move.take)
        now = time.time()
        session.updated_at = now
        self._log({"ts": now, "session": session.id, "event": "engine", "take": move.take})
        return {
            "take": move.take,
            "leastSummand": move.least_summand,
            "winning": move.winning,
            "representation": [str(v) for v in move.representation.summands()],
        }

    def hint(self, sid: str) -> tuple[int, dict]:
        session = self._get(sid)
        with session.lock:
            if session.state.over:
                raise ApiError(409, "game is over", {"maxTake": None})
            move = nim.strategy_move(session.config, session.state)
            return 200, {
                "take": move.take,
                "leastSummand": move.least_summand,
                "winning": move.winning,
                "representation": [str(v) for v in move.representation.summands()],
            }

    def delete_game(self, sid: str) -> tuple[int, None]:
        session = self._get(sid)
        self._expire(session, "deleted")
        return 204, None


# -- HTTP layer --------------------------------------------------------------

_ROUTES = [
    ("POST", re.compile(r"^/games$"), "create"),
    ("GET", re.compile(r"^/games/([0-9a-f]+)$"), "get"),
    ("POST", re.compile(r"^/games/([0-9a-f]+)/moves$"), "move"),
    ("GET", re.compile(r"^/games/([0-9a-f]+)/hint$"), "hint"),
    ("DELETE", re.compile(r"^/games/([0-9a-f]+)$"), "delete"),
]


def make_handler(service: GameService, cors_origin: str = "*"):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _send(self, status: int, body: dict | None) -> None:
            payload = canonical_json(body) if body is not None else b""
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(payload)))
            self.send_header("Access-Control-Allow-Origin", cors_origin)
            self.end_headers()
            if payload:
                self.wfile.write(payload)

        def _dispatch(self, method: str) -> None:
            path = self.path.split("?", 1)[0]
            for verb, pattern, action in _ROUTES:
                if verb != method:
                    continue
                match = pattern.match(path)
                if not match:
                    continue
                try:
                    if action == "create":
                        status, body = service.create_game(self._read_json())
                    elif action == "get":
                        status, body = service.get_game(match.group(1))
                    elif action == "move":
                        status, body = service.move(match.group(1), self._read_json())
                    elif action == "hint":
                        status, body = service.hint(match.group(1))
                    else:
                        status, body = service.delete_game(match.group(1))
                except ApiError as exc:
                    self._send(exc.status, exc.body)
                    return
                except json.JSONDecodeError:
                    self._send(400, {"error": "invalid JSON body"})
                    return
                self._send(status, body)
                return
            self._send(404, {"error": f"no route {method} {path}"})

        def _read_json(self) -> dict:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b"{}"
            data = json.loads(raw or b"{}")
            if not isinstance(data, dict):
                raise ApiError(400, "body must be a JSON object")
            return data

        def do_GET(self):
            self._dispatch("GET")

        def do_POST(self):
            self._dispatch("POST")

        def do_DELETE(self):
            self._dispatch("DELETE")

        def do_OPTIONS(self):
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", cors_origin)
            self.send_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Content-Length", "0")
            self.end_headers()

    return Handler


def make_server(
    port: int = 0,
    bind: str = "127.0.0.1",
    persist: str | None = None,
    engine_first_default: bool = False,
    ttl_seconds: float = 3600.0,
    cors_origin: str = "*",
) -> tuple[ThreadingHTTPServer, GameService]:
    service = GameService(engine_first_default, ttl_seconds, persist)
    handler = make_handler(service, cors_origin)
    httpd = ThreadingHTTPServer((bind, port), handler)
    httpd.daemon_threads = True
    return httpd, service


def serve(
    port: int,
    bind: str = "127.0.0.1",
    persist: str | None = None,
    engine_first_default: bool = False,
    ttl_seconds: float = 3600.0,
    cors_origin: str = "*",
) -> int:
    try:
        httpd, _ = make_server(port, bind, persist, engine_first_default,
                               ttl_seconds, cors_origin)
    except OSError as exc:
        print(f"cannot bind {bind}:{port}: {exc}")
        return 2
    host, actual_port = httpd.server_address[:2]
    print(f"listening on {host}:{actual_port}", flush=True)
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
    return 0
