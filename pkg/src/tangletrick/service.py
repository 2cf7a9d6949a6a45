"""Small JSON-over-HTTP facade exposing trick sessions.

Endpoints:

    POST /sessions                      {"seed": n}           → snapshot
    POST /sessions/{id}/moves          {"role": r, "move": m} → snapshot
    POST /sessions/{id}/reveal                                → snapshot
    GET  /sessions/{id}?role=r                                → role-gated snapshot
    GET  /sessions/{id}/hint                                  → {"move": "T"|"R"}

Errors: 404 unknown session, 400 malformed body/move/role, 409 phase or
role violation.  CORS is open so the companion page can poll from any
origin.

Sessions live in memory keyed by id; mutations of one session are
linearized by a per-session lock while distinct sessions proceed in
parallel.  With a persistence path every mutation also writes a JSON
snapshot file, so a restarted process replays to identical sessions.
"""

from __future__ import annotations

import json
import os
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Callable
from urllib.parse import parse_qs, urlparse

from .session import (
    PhaseError,
    TrickSession,
    caller_move,
    create_session,
    hint,
    magician_move,
    reveal,
    session_from_state,
    session_to_state,
    snapshot,
)


class UnknownSession(KeyError):
    pass


class SessionStore:
    """Thread-safe in-memory session store with optional file persistence."""

    def __init__(self, persist_path: str | None = None):
        self._sessions: dict[str, TrickSession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        self._persist_path = persist_path
        if persist_path and os.path.exists(persist_path):
            with open(persist_path, encoding="utf-8") as fh:
                data = json.load(fh)
            for state in data["sessions"]:
                s = session_from_state(state)
                self._sessions[s.id] = s
                self._locks[s.id] = threading.Lock()

    def create(self, seed: int) -> TrickSession:
        s = create_session(seed)
        with self._registry_lock:
            self._sessions[s.id] = s
            self._locks[s.id] = threading.Lock()
        self._save()
        return s

    def get(self, session_id: str) -> TrickSession:
        with self._registry_lock:
            try:
                return self._sessions[session_id]
            except KeyError:
                raise UnknownSession(session_id) from None

    def mutate(self, session_id: str, fn: Callable[[TrickSession], TrickSession]) -> TrickSession:
        """Apply fn under the session's lock, store and persist the result."""
        with self._registry_lock:
            if session_id not in self._sessions:
                raise UnknownSession(session_id)
            lock = self._locks[session_id]
        with lock:
            updated = fn(self._sessions[session_id])
            with self._registry_lock:
                self._sessions[session_id] = updated
        self._save()
        return updated

    def _save(self) -> None:
        if not self._persist_path:
            return
        with self._registry_lock:
            payload = {"sessions": [session_to_state(s) for s in self._sessions.values()]}
        tmp = self._persist_path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
        os.replace(tmp, self._persist_path)


def _apply_move(store: SessionStore, session_id: str, role: str, move: str) -> TrickSession:
    if role == "caller":
        return store.mutate(session_id, lambda s: caller_move(s, move))
    if role == "magician":
        return store.mutate(session_id, lambda s: magician_move(s, move))
    if role in ("assistant", "audience"):
        raise PhaseError(f"role {role!r} does not perform moves")
    raise ValueError(f"unknown role {role!r}")


class _Handler(BaseHTTPRequestHandler):
    server: "ServiceServer"

    def log_message(self, fmt, *args):  # keep test output quiet
        pass

    def _send_json(self, status: int, obj) -> None:
        body = json.dumps(obj).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_error_json(self, status: int, message: str) -> None:
        self._send_json(status, {"error": message})

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return {}
        try:
            data = json.loads(raw)
        except json.JSONDecodeError:
            raise ValueError("request body is not valid JSON") from None
        if not isinstance(data, dict):
            raise ValueError("request body must be a JSON object")
        return data

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_POST(self):
        try:
            store = self.server.store
            parts = [p for p in urlparse(self.path).path.split("/") if p]
            if parts == ["sessions"]:
                body = self._read_body()
                seed = body.get("seed", 0)
                if not isinstance(seed, int):
                    raise ValueError("seed must be an integer")
                s = store.create(seed)
                self._send_json(200, snapshot(s, "assistant"))
            elif len(parts) == 3 and parts[0] == "sessions" and parts[2] == "moves":
                body = self._read_body()
                role = body.get("role")
                move = body.get("move")
                if not isinstance(role, str) or not isinstance(move, str):
                    raise ValueError("body must carry string fields 'role' and 'move'")
                s = _apply_move(store, parts[1], role, move)
                self._send_json(200, snapshot(s, role))
            elif len(parts) == 3 and parts[0] == "sessions" and parts[2] == "reveal":
                s = store.mutate(parts[1], lambda cur: reveal(cur)[0])
                self._send_json(200, snapshot(s, "assistant"))
            else:
                self._send_error_json(404, f"no such endpoint: POST {self.path}")
        except UnknownSession as exc:
            self._send_error_json(404, f"unknown session {exc.args[0]!r}")
        except PhaseError as exc:
            self._send_error_json(409, str(exc))
        except ValueError as exc:
            self._send_error_json(400, str(exc))

    def do_GET(self):
        try:
            store = self.server.store
            url = urlparse(self.path)
            parts = [p for p in url.path.split("/") if p]
            if len(parts) == 2 and parts[0] == "sessions":
                role = parse_qs(url.query).get("role", ["audience"])[0]
                s = store.get(parts[1])
                self._send_json(200, snapshot(s, role))
            elif len(parts) == 3 and parts[0] == "sessions" and parts[2] == "hint":
                s = store.get(parts[1])
                self._send_json(200, {"move": hint(s)})
            else:
                self._send_error_json(404, f"no such endpoint: GET {self.path}")
        except UnknownSession as exc:
            self._send_error_json(404, f"unknown session {exc.args[0]!r}")
        except PhaseError as exc:
            self._send_error_json(409, str(exc))
        except ValueError as exc:
            self._send_error_json(400, str(exc))


class ServiceServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address: tuple[str, int], store: SessionStore):
        super().__init__(address, _Handler)
        self.store = store


def make_server(host: str = "127.0.0.1", port: int = 8642,
                persist_path: str | None = None) -> ServiceServer:
    """Build a ready-to-run server; port 0 picks a free port."""
    return ServiceServer((host, port), SessionStore(persist_path))


def run(host: str = "127.0.0.1", port: int = 8642, persist_path: str | None = None) -> None:
    server = make_server(host, port, persist_path)
    actual_port = server.server_address[1]
    print(f"tangletrick service on http://{host}:{actual_port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
