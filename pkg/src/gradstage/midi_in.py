"""Optional MIDI input adapter.

Any MIDI source works (the piece only listens); requires the `mido`
package plus a backend, which this module probes for at call time so the
rest of the engine carries no hard MIDI dependency.
"""

from __future__ import annotations

from typing import Callable

SubmitNote = Callable[[bool, int, int], object]


class MidiUnavailable(RuntimeError):
    pass


def open_midi_input(name: str, submit: SubmitNote):
    """Open a named MIDI input and forward note events to `submit`.

    Returns the open port (close it when done).  Raises MidiUnavailable
    when no MIDI stack is importable.
    """
    try:
        import mido
    except ImportError as exc:
        raise MidiUnavailable(
            "MIDI input needs the 'mido' package and a backend; "
            "use --script or the WebSocket keyboard instead"
        ) from exc

    def forward(message) -> None:
        if message.type == "note_on":
            # Velocity-0 note-ons are note-offs in disguise.
            submit(message.velocity > 0, message.note, message.velocity)
        elif message.type == "note_off":
            submit(False, message.note, message.velocity)

    try:
        port = mido.open_input(name, callback=forward)
    except OSError as exc:
        raise MidiUnavailable(f"cannot open MIDI input {name!r}: {exc}") from exc
    return port
