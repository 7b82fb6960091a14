"""Scripted-event files: a hardware-free stand-in for the MIDI keyboard.

Line format, whitespace-separated:

    <at_ms> on <note> [velocity]
    <at_ms> off <note> [velocity]
    <at_ms> advance
    <at_ms> end

'#' starts a comment, blank lines are ignored, timestamps must be
non-decreasing, and 'end' must appear exactly once as the last event.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class ScriptError(ValueError):
    """Base for script file problems; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ParseError(ScriptError):
    pass


class OrderError(ScriptError):
    pass


class EventKind(enum.Enum):
    NOTE_ON = "on"
    NOTE_OFF = "off"
    ADVANCE_PART = "advance"
    END = "end"


@dataclass(frozen=True)
class ScriptedEvent:
    at_ms: int
    kind: EventKind
    note: int = 0
    velocity: int = 0


_DEFAULT_VELOCITY = 64


def parse_script(text: bytes | str) -> list[ScriptedEvent]:
    """Parse script text into an ordered event list (see module docstring)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    events: list[ScriptedEvent] = []
    prev_ms = -1
    saw_end = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if saw_end:
            raise ParseError(line_no, "event after 'end'")
        fields = line.split()
        try:
            at_ms = int(fields[0])
        except ValueError:
            raise ParseError(line_no, f"bad timestamp {fields[0]!r}") from None
        if at_ms < 0:
            raise ParseError(line_no, "timestamp must be non-negative")
        if at_ms < prev_ms:
            raise OrderError(line_no, f"timestamp {at_ms} decreases (previous {prev_ms})")
        prev_ms = at_ms

        try:
            kind = EventKind(fields[1])
        except (IndexError, ValueError):
            raise ParseError(line_no, f"unknown event kind in {line!r}") from None

        if kind in (EventKind.NOTE_ON, EventKind.NOTE_OFF):
            if len(fields) < 3:
                raise ParseError(line_no, f"{kind.value} requires a note number")
            if len(fields) > 4:
                raise ParseError(line_no, "too many fields")
            try:
                note = int(fields[2])
                velocity = int(fields[3]) if len(fields) == 4 else _DEFAULT_VELOCITY
            except ValueError:
                raise ParseError(line_no, f"bad note/velocity in {line!r}") from None
            if not 0 <= note <= 127 or not 0 <= velocity <= 127:
                raise ParseError(line_no, "note and velocity must be in 0..127")
            events.append(ScriptedEvent(at_ms, kind, note, velocity))
        else:
            if len(fields) != 2:
                raise ParseError(line_no, f"{kind.value} takes no arguments")
            events.append(ScriptedEvent(at_ms, kind))
            if kind is EventKind.END:
                saw_end = True

    if not events:
        raise ParseError(1, "empty script")
    if not saw_end:
        raise ParseError(len(text.splitlines()) or 1, "script must finish with 'end'")
    return events
