"""Reference backend server for the summarization wire protocol.

Used as a test fixture and for offline demo runs.  Besides the default
lead-sentence behavior it can echo, stall, or misbehave on demand so
client error handling can be exercised:

    python -m hybridsum.stub_backend --port 8800 --mode lead
"""

from __future__ import annotations

import argparse
import json
import threading
import time
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .abstractive import AbstractiveRequest, summarize_stub

MODES = ("lead", "echo", "empty", "malformed", "error")


def _summary_for(mode: str, text: str, max_words: int) -> str:
    if mode == "echo":
        return text
    if mode == "empty":
        return ""
    return summarize_stub(AbstractiveRequest(text=text, max_words=max_words)).text


class _Handler(BaseHTTPRequestHandler):
    server: "StubBackendServer"

    def do_POST(self):  # noqa: N802  (http.server API)
        if self.path != "/summarize":
            self._send(404, {"error": "not found"})
            return
        length = int(self.headers.get("Content-Length", 0))
        try:
            body = json.loads(self.rfile.read(length).decode("utf-8"))
            text = body["text"]
            max_words = int(body.get("max_words", 40))
        except (ValueError, KeyError):
            self._send(400, {"error": "bad request"})
            return
        if self.server.delay_ms:
            time.sleep(self.server.delay_ms / 1000.0)
        mode = self.server.mode
        if mode == "error":
            self._send(500, {"error": "internal"})
            return
        if mode == "malformed":
            self._send(200, {"model": self.server.model_name})
            return
        self._send(200, {"summary": _summary_for(mode, text, max_words), "model": self.server.model_name})

    def log_message(self, format, *args):  # silence per-request stderr noise
        pass

    def _send(self, status: int, payload: dict) -> None:
        data = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


class StubBackendServer(ThreadingHTTPServer):
    """Threaded stub server; use as a context manager in tests."""

    def __init__(self, port: int = 0, mode: str = "lead", delay_ms: int = 0, model_name: str = "stub-lead"):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        super().__init__(("127.0.0.1", port), _Handler)
        self.mode = mode
        self.delay_ms = delay_ms
        self.model_name = model_name
        self._thread: threading.Thread | None = None

    @property
    def url(self) -> str:
        return f"http://127.0.0.1:{self.server_address[1]}"

    def handle_error(self, request, client_address):
        # clients that time out hang up mid-response; not worth a traceback
        pass

    def start(self) -> "StubBackendServer":
        self._thread = threading.Thread(target=self.serve_forever, daemon=True)
        self._thread.start()
        return self

    def stop(self) -> None:
        self.shutdown()
        self.server_close()
        if self._thread:
            self._thread.join(timeout=5)

    def __enter__(self) -> "StubBackendServer":
        return self.start()

    def __exit__(self, *exc) -> None:
        self.stop()


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="Run the reference stub backend server.")
    parser.add_argument("--port", type=int, default=8800)
    parser.add_argument("--mode", choices=MODES, default="lead")
    parser.add_argument("--delay-ms", type=int, default=0)
    args = parser.parse_args(argv)
    server = StubBackendServer(port=args.port, mode=args.mode, delay_ms=args.delay_ms)
    print(f"stub backend listening on {server.url} (mode={args.mode})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
