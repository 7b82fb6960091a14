"""OSC 1.0 message encoding for the telemetry stream.

Wire schema (all standalone messages, no bundles):

    /ldd/part    ,i   part number
    /ldd/loss    ,f   current loss
    /ldd/grad    ,f.. one float per gradient component, in order
    /ldd/detune  ,iff.. note number, fundamental, detuned overtones

Strings are NUL-terminated and padded to 4 bytes; numeric payloads are
big-endian; ints are int32, floats IEEE-754 single precision.
"""

from __future__ import annotations

import socket
import struct
from typing import Iterable

from .snapshot import StateSnapshot

PART_ADDRESS = "/ldd/part"
LOSS_ADDRESS = "/ldd/loss"
GRAD_ADDRESS = "/ldd/grad"
DETUNE_ADDRESS = "/ldd/detune"


def _padded_string(s: str) -> bytes:
    raw = s.encode("ascii") + b"\x00"
    return raw + b"\x00" * (-len(raw) % 4)


def encode_message(address: str, args: Iterable[tuple[str, float | int]]) -> bytes:
    """Encode one OSC message from (typetag, value) argument pairs."""
    tags = ","
    payload = b""
    for tag, value in args:
        if tag == "i":
            payload += struct.pack(">i", int(value))
        elif tag == "f":
            payload += struct.pack(">f", float(value))
        else:
            raise ValueError(f"unsupported OSC type tag {tag!r}")
        tags += tag
    return _padded_string(address) + _padded_string(tags) + payload


def encode_osc(snap: StateSnapshot) -> list[bytes]:
    """All telemetry messages for one snapshot."""
    messages = [encode_message(PART_ADDRESS, [("i", snap.part)])]
    if snap.kind is not None:
        messages.append(encode_message(LOSS_ADDRESS, [("f", snap.loss)]))
        messages.append(encode_message(GRAD_ADDRESS, [("f", g) for g in snap.grad]))
    for note, series in snap.detuned_notes:
        args: list[tuple[str, float | int]] = [("i", note), ("f", series.fundamental)]
        args.extend(("f", f) for f in series.overtones)
        messages.append(encode_message(DETUNE_ADDRESS, args))
    return messages


def parse_destination(dest: str) -> tuple[str, int]:
    """Split a host:port destination string."""
    host, sep, port = dest.rpartition(":")
    if not sep or not host:
        raise ValueError(f"OSC destination must be host:port, got {dest!r}")
    return host, int(port)


class OscSender:
    """Fire-and-forget UDP sender for snapshot telemetry."""

    def __init__(self, dest: str):
        self._addr = parse_destination(dest)
        self._sock = socket.socket(socket.AF_INET, socket.SOCK_DGRAM)

    def send_snapshot(self, snap: StateSnapshot) -> None:
        for message in encode_osc(snap):
            self._sock.sendto(message, self._addr)

    def close(self) -> None:
        self._sock.close()
