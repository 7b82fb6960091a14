"""Deterministic headless replay: scripted events in, JSON-lines actions out.

The virtual clock interleaves scripted events with engine ticks at a fixed
cadence; given the same script, seed, and config the emitted log is
byte-identical run to run (floats serialize at Python's shortest
round-trip representation).
"""

from __future__ import annotations

import json
from typing import Any

from .performance import (
    Action,
    Detune,
    DistortionUpdate,
    EngineConfig,
    EngineState,
    NewApproximant,
    NewTarget,
    NoteEvent,
    SpawnBubble,
    advance_part,
    handle_event,
    new_engine,
    tick,
)
from .script import EventKind, ScriptedEvent
from .snapshot import distortion_to_dict, target_vector

DEFAULT_TICK_HZ = 60.0


def action_to_dict(action: Action) -> dict[str, Any]:
    if isinstance(action, NewTarget):
        return {
            "action": "new_target",
            "kind": action.kind.value,
            "params": list(target_vector(action.params)),
        }
    if isinstance(action, NewApproximant):
        return {
            "action": "new_approximant",
            "kind": action.kind.value,
            "theta": list(action.theta),
        }
    if isinstance(action, Detune):
        return {
            "action": "detune",
            "note": action.note,
            "fundamental": action.series.fundamental,
            "overtones": list(action.series.overtones),
            "loss": action.loss,
            "loss_applied": action.series.loss_applied,
        }
    if isinstance(action, SpawnBubble):
        return {"action": "spawn_bubble", "note": action.note, "velocity": action.velocity}
    if isinstance(action, DistortionUpdate):
        return {"action": "distortion", **distortion_to_dict(action.params)}
    raise TypeError(f"unknown action {action!r}")


def _line(t_ms: float, payload: dict[str, Any]) -> str:
    return json.dumps({"t": t_ms, **payload}, sort_keys=True, separators=(",", ":"))


def run_replay(
    events: list[ScriptedEvent],
    config: EngineConfig | None = None,
    tick_hz: float = DEFAULT_TICK_HZ,
) -> list[str]:
    """Drive the engine through the script; returns JSON-lines of every action.

    Ticks run at multiples of the tick interval; an event and a tick due at
    the same instant process the event first.  The dt handed to each tick
    is whatever keeps the engine clock equal to the replay clock, so event
    timestamps and tick times never drift apart.
    """
    if not events or events[-1].kind is not EventKind.END:
        raise ValueError("script must end with an 'end' event")
    interval = 1000.0 / tick_hz
    state: EngineState = new_engine(config)
    lines: list[str] = []
    tick_index = 0

    def run_ticks_before(t_ms: float) -> None:
        nonlocal state, tick_index
        while (due := (tick_index + 1) * interval) < t_ms:
            state, actions = tick(state, max(0.0, due - state.now_ms))
            tick_index += 1
            for action in actions:
                lines.append(_line(due, action_to_dict(action)))

    for ev in events:
        run_ticks_before(float(ev.at_ms))
        if ev.kind is EventKind.END:
            lines.append(_line(float(ev.at_ms), {"action": "end"}))
            break
        if ev.kind is EventKind.ADVANCE_PART:
            state = advance_part(state)
            lines.append(
                _line(float(ev.at_ms), {"action": "advance_part", "part": int(state.part)})
            )
            continue
        note_event = NoteEvent(
            ev.note, ev.velocity, ev.kind is EventKind.NOTE_ON, float(ev.at_ms)
        )
        state, actions = handle_event(state, note_event)
        for action in actions:
            lines.append(_line(float(ev.at_ms), action_to_dict(action)))
    return lines


def replay_to_bytes(
    events: list[ScriptedEvent],
    config: EngineConfig | None = None,
    tick_hz: float = DEFAULT_TICK_HZ,
) -> bytes:
    """The byte-exact log artifact: one JSON object per line, LF-terminated."""
    lines = run_replay(events, config, tick_hz)
    return ("\n".join(lines) + "\n").encode("utf-8")
