"""HTTP session server behind the interactive explorer.

One in-memory session: a current tree, an undo stack of (edge, previous
tree), and a revision counter echoed in every response.  State changes are
serialized through a lock; reads are safe concurrently.  The JSON API lives
under /api/, everything else is served from the UI bundle directory.
"""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .ribbon import (
    BrauerTree,
    NotIncident,
    UnknownEdge,
    cartan_formula,
    ext_formula,
    mutate,
    to_star_sequence,
)
from .formats import tree_to_obj

FALLBACK_PAGE = """<!doctype html>
<html><head><meta charset="utf-8"><title>brauertrees</title></head>
<body><h1>brauertrees session server</h1>
<p>No UI bundle found. The JSON API is live under <code>/api/</code>;
build the frontend and pass <code>--ui-dir</code> to serve it here.</p>
</body></html>
"""


class Session:
    """Current tree plus the history needed to replay or undo it."""

    def __init__(self, tree: BrauerTree):
        self.initial = tree
        self.tree = tree
        self.history: list[tuple[int, BrauerTree]] = []
        self.revision = 1
        self.lock = threading.Lock()

    def mutate(self, edge: int) -> None:
        with self.lock:
            previous = self.tree
            self.tree = mutate(self.tree, edge)
            self.history.append((edge, previous))
            self.revision += 1

    def undo(self) -> None:
        with self.lock:
            if not self.history:
                raise IndexError("history is empty")
            _, previous = self.history.pop()
            self.tree = previous
            self.revision += 1

    def replay_ok(self) -> bool:
        cur = self.initial
        for edge, _ in self.history:
            cur = mutate(cur, edge)
        return cur == self.tree


class _Handler(BaseHTTPRequestHandler):
    session: Session
    ui_dir: Path | None

    def log_message(self, *args):  # quiet by default
        pass

    def _send_json(self, payload: dict, status: int = 200) -> None:
        body = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _error(self, status: int, message: str) -> None:
        self._send_json({"error": message, "revision": self.session.revision}, status)

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        if not length:
            return {}
        try:
            return json.loads(self.rfile.read(length))
        except json.JSONDecodeError:
            return {}

    def _tree_payload(self) -> dict:
        s = self.session
        return {
            "revision": s.revision,
            "tree": tree_to_obj(s.tree),
            "cartan": cartan_formula(s.tree),
        }

    def do_GET(self):
        s = self.session
        if self.path == "/api/tree":
            self._send_json({"revision": s.revision, "tree": tree_to_obj(s.tree)})
        elif self.path == "/api/cartan":
            self._send_json({"revision": s.revision, "cartan": cartan_formula(s.tree)})
        elif self.path == "/api/ext":
            self._send_json({"revision": s.revision, "ext": ext_formula(s.tree)})
        elif self.path == "/api/history":
            self._send_json(
                {
                    "revision": s.revision,
                    "history": [{"edge": e} for e, _ in s.history],
                }
            )
        elif self.path.startswith("/api/"):
            self._error(404, f"no such endpoint {self.path}")
        else:
            self._serve_static()

    def do_POST(self):
        s = self.session
        if self.path == "/api/mutate":
            body = self._read_body()
            edge = body.get("edge")
            try:
                s.mutate(int(edge))
            except (UnknownEdge, TypeError, ValueError):
                self._error(400, f"invalid edge {edge!r}")
                return
            self._send_json(self._tree_payload())
        elif self.path == "/api/undo":
            try:
                s.undo()
            except IndexError:
                self._error(409, "history is empty")
                return
            self._send_json(self._tree_payload())
        elif self.path == "/api/to-star":
            body = self._read_body()
            vertex = body.get("vertex")
            try:
                seq = to_star_sequence(s.tree, str(vertex))
            except NotIncident:
                self._error(400, f"invalid vertex {vertex!r}")
                return
            self._send_json(
                {"revision": s.revision, "vertex": vertex, "sequence": seq}
            )
        else:
            self._error(404, f"no such endpoint {self.path}")

    def _serve_static(self):
        path = self.path.split("?", 1)[0]
        if path in ("", "/"):
            path = "/index.html"
        if self.ui_dir is not None:
            target = (self.ui_dir / path.lstrip("/")).resolve()
            if target.is_file() and self.ui_dir.resolve() in target.parents:
                content = target.read_bytes()
                ctype = {
                    ".html": "text/html",
                    ".js": "application/javascript",
                    ".css": "text/css",
                    ".svg": "image/svg+xml",
                    ".map": "application/json",
                }.get(target.suffix, "application/octet-stream")
                self.send_response(200)
                self.send_header("Content-Type", ctype)
                self.send_header("Content-Length", str(len(content)))
                self.end_headers()
                self.wfile.write(content)
                return
        if path == "/index.html":
            body = FALLBACK_PAGE.encode()
            self.send_response(200)
            self.send_header("Content-Type", "text/html")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)
        else:
            self.send_response(404)
            self.end_headers()


def build_server(
    tree: BrauerTree, port: int, host: str = "127.0.0.1", ui_dir: Path | None = None
) -> ThreadingHTTPServer:
    session = Session(tree)
    handler = type("Handler", (_Handler,), {"session": session, "ui_dir": ui_dir})
    server = ThreadingHTTPServer((host, port), handler)
    server.session = session  # type: ignore[attr-defined]
    return server


def serve(tree: BrauerTree, port: int, host: str = "127.0.0.1", ui_dir: Path | None = None) -> None:
    server = build_server(tree, port, host, ui_dir)
    actual = server.server_address[1]
    print(f"serving on http://{host}:{actual}/ (API under /api/)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
