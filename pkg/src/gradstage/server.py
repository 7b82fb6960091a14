"""WebSocket state stream for the studio UI.

Pushes one JSON snapshot per publish period to every client and accepts
two inbound message types:

    {"type": "note", "on": bool, "note": int, "velocity": int}
    {"type": "advance_part"}

Publishing never waits on a client: each client has a small outbound
queue, overflow drops frames for that client only, and a client that
stays saturated is disconnected.
"""

from __future__ import annotations

import asyncio
import json
import logging

from websockets.asyncio.server import ServerConnection, serve
from websockets.exceptions import ConnectionClosed

from .live import EngineLoop
from .snapshot import snapshot_to_dict

log = logging.getLogger(__name__)

DEFAULT_PUBLISH_HZ = 60.0


class BindError(OSError):
    """Could not bind the requested WebSocket port."""


class _Client:
    def __init__(self, ws: ServerConnection, queue_limit: int, max_drops: int):
        self.ws = ws
        self.outbox: asyncio.Queue[str] = asyncio.Queue(maxsize=queue_limit)
        self.max_drops = max_drops
        self.drops = 0

    def offer(self, payload: str) -> bool:
        """Queue a frame; returns False once the client is hopelessly behind."""
        try:
            self.outbox.put_nowait(payload)
            self.drops = 0
            return True
        except asyncio.QueueFull:
            self.drops += 1
            return self.drops < self.max_drops

    async def send_loop(self) -> None:
        while True:
            payload = await self.outbox.get()
            await self.ws.send(payload)


class StateServer:
    """Publishes engine snapshots and feeds client input back to the engine."""

    def __init__(
        self,
        engine: EngineLoop,
        host: str = "127.0.0.1",
        port: int = 8765,
        publish_hz: float = DEFAULT_PUBLISH_HZ,
        queue_limit: int = 8,
        max_drops: int = 180,
    ):
        self._engine = engine
        self._host = host
        self._requested_port = port
        self._publish_hz = publish_hz
        self._queue_limit = queue_limit
        self._max_drops = max_drops
        self._clients: set[_Client] = set()
        self._server = None
        self._publisher: asyncio.Task | None = None
        self.port: int | None = None

    async def start(self) -> None:
        try:
            self._server = await serve(self._handler, self._host, self._requested_port)
        except OSError as exc:
            raise BindError(f"cannot bind {self._host}:{self._requested_port}: {exc}") from exc
        self.port = self._server.sockets[0].getsockname()[1]
        self._publisher = asyncio.create_task(self._publish_loop())

    async def stop(self) -> None:
        if self._publisher is not None:
            self._publisher.cancel()
        if self._server is not None:
            self._server.close()
            await self._server.wait_closed()

    async def _publish_loop(self) -> None:
        period = 1.0 / self._publish_hz
        while True:
            payload = json.dumps(snapshot_to_dict(self._engine.snapshot()))
            for client in list(self._clients):
                if not client.offer(payload):
                    log.info("dropping slow client %s", client.ws.remote_address)
                    self._clients.discard(client)
                    await client.ws.close(code=1013, reason="too slow")
            await asyncio.sleep(period)

    async def _handler(self, ws: ServerConnection) -> None:
        client = _Client(ws, self._queue_limit, self._max_drops)
        self._clients.add(client)
        sender = asyncio.create_task(client.send_loop())
        try:
            async for raw in ws:
                await self._handle_inbound(ws, raw)
        except ConnectionClosed:
            pass
        finally:
            self._clients.discard(client)
            sender.cancel()

    async def _handle_inbound(self, ws: ServerConnection, raw: str | bytes) -> None:
        # Per-client errors answer the client; they never reach the engine.
        try:
            message = json.loads(raw)
            mtype = message.get("type")
            if mtype == "note":
                on = message["on"]
                note = message["note"]
                velocity = message.get("velocity", 64)
                if not (
                    isinstance(on, bool)
                    and isinstance(note, int)
                    and isinstance(velocity, int)
                    and 0 <= note <= 127
                    and 0 <= velocity <= 127
                ):
                    raise ValueError("bad note message fields")
                self._engine.submit_note(on, note, velocity)
            elif mtype == "advance_part":
                self._engine.submit_advance()
            else:
                raise ValueError(f"unknown message type {mtype!r}")
        except (ValueError, KeyError, TypeError) as exc:
            try:
                await ws.send(json.dumps({"type": "error", "error": str(exc)}))
            except ConnectionClosed:
                pass


async def serve_state(
    engine: EngineLoop,
    port: int,
    host: str = "127.0.0.1",
    publish_hz: float = DEFAULT_PUBLISH_HZ,
) -> StateServer:
    """Start a StateServer and return it once it is listening."""
    server = StateServer(engine, host=host, port=port, publish_hz=publish_hz)
    await server.start()
    return server
