"""Real-time engine runner.

A single loop thread owns the EngineState: input adapters (WebSocket,
MIDI, script feeder) only enqueue timestamped events, and outputs only see
immutable snapshots, so nothing else ever touches engine state.
"""

from __future__ import annotations

import logging
import queue
import threading
import time
from typing import Callable

from .performance import (
    EngineConfig,
    EngineState,
    NoteEvent,
    advance_part,
    handle_event,
    new_engine,
    tick,
)
from .script import EventKind, ScriptedEvent
from .snapshot import StateSnapshot, build_snapshot

log = logging.getLogger(__name__)

SnapshotSink = Callable[[StateSnapshot], None]


class EngineLoop:
    """Runs the state machine against the wall clock at a fixed tick rate."""

    def __init__(self, config: EngineConfig | None = None, tick_hz: float = 60.0):
        self._state: EngineState = new_engine(config)
        self._inbox: queue.SimpleQueue = queue.SimpleQueue()
        self._lock = threading.Lock()
        self._snapshot = build_snapshot(self._state, 0.0)
        self._sinks: list[SnapshotSink] = []
        self._stop = threading.Event()
        self._thread: threading.Thread | None = None
        self._t0 = time.monotonic()
        self._last_ts = 0.0
        self._tick_period = 1.0 / tick_hz
        self.ticks = 0

    def add_snapshot_sink(self, sink: SnapshotSink) -> None:
        """Register an output consumer; it must not block the loop."""
        self._sinks.append(sink)

    def now_ms(self) -> float:
        return (time.monotonic() - self._t0) * 1000.0

    def submit_note(self, on: bool, note: int, velocity: int) -> float:
        """Enqueue a note event, stamping it with the loop's monotonic clock."""
        ts = self.now_ms()
        self._inbox.put(("note", ts, on, note, velocity))
        return ts

    def submit_advance(self) -> None:
        self._inbox.put(("advance", self.now_ms()))

    def snapshot(self) -> StateSnapshot:
        with self._lock:
            return self._snapshot

    def start(self) -> None:
        self._thread = threading.Thread(target=self._run, name="engine-loop", daemon=True)
        self._thread.start()

    def stop(self) -> None:
        self._stop.set()
        if self._thread is not None:
            self._thread.join(timeout=5.0)

    @property
    def running(self) -> bool:
        return self._thread is not None and self._thread.is_alive()

    def _drain_inbox(self) -> None:
        while True:
            try:
                item = self._inbox.get_nowait()
            except queue.Empty:
                return
            ts = max(item[1], self._last_ts)
            self._last_ts = ts
            if item[0] == "note":
                _, _, on, note, velocity = item
                event = NoteEvent(note, velocity, on, ts)
                self._state, _ = handle_event(self._state, event)
            else:
                self._state = advance_part(self._state)

    def _run(self) -> None:
        deadline = time.monotonic() + self._tick_period
        while not self._stop.is_set():
            delay = deadline - time.monotonic()
            if delay > 0:
                time.sleep(delay)
            now_ms = self.now_ms()
            self._drain_inbox()
            dt = max(0.0, now_ms - self._state.now_ms)
            self._state, _ = tick(self._state, dt)
            snap = build_snapshot(self._state, now_ms)
            with self._lock:
                self._snapshot = snap
            self.ticks += 1
            for sink in self._sinks:
                try:
                    sink(snap)
                except Exception:
                    log.exception("snapshot sink failed")
            deadline += self._tick_period
            behind = time.monotonic() - deadline
            if behind > 0:
                deadline += behind + self._tick_period


class ScriptFeeder(threading.Thread):
    """Plays a parsed script against an EngineLoop in real time."""

    def __init__(self, loop: EngineLoop, events: list[ScriptedEvent]):
        super().__init__(name="script-feeder", daemon=True)
        self._loop = loop
        self._events = events
        self.finished = threading.Event()

    def run(self) -> None:
        t0 = time.monotonic()
        for ev in self._events:
            wait = t0 + ev.at_ms / 1000.0 - time.monotonic()
            if wait > 0:
                time.sleep(wait)
            if ev.kind is EventKind.NOTE_ON:
                self._loop.submit_note(True, ev.note, ev.velocity)
            elif ev.kind is EventKind.NOTE_OFF:
                self._loop.submit_note(False, ev.note, ev.velocity)
            elif ev.kind is EventKind.ADVANCE_PART:
                self._loop.submit_advance()
            else:
                break
        self.finished.set()
