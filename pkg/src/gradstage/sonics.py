"""Note-to-frequency mapping and loss-proportional overtone detuning.

The fundamental always stays put; only the overtones are pushed sharp by a
factor (1 + loss), so a converging fit is heard as the sound settling into
its harmonic series.
"""

from __future__ import annotations

from dataclasses import dataclass

A4_MIDI = 69
A4_HZ = 440.0

# Overtones multiplied by (1 + loss) with loss capped here: early random
# targets can have losses well above 1, and an uncapped multiplier throws
# partials out of useful audio range.
LOSS_CAP = 1.0
DEFAULT_OVERTONE_COUNT = 3


class OutOfRangeError(ValueError):
    """MIDI note outside 0..127."""


@dataclass(frozen=True)
class OvertoneSeries:
    fundamental: float
    overtones: tuple[float, ...]


@dataclass(frozen=True)
class DetunedSeries:
    fundamental: float
    overtones: tuple[float, ...]
    loss_applied: float


def midi_to_hz(note: int) -> float:
    """Equal-temperament frequency of a MIDI note (A4 = 69 = 440 Hz)."""
    if not 0 <= note <= 127:
        raise OutOfRangeError(f"MIDI note {note} outside 0..127")
    return A4_HZ * 2.0 ** ((note - A4_MIDI) / 12.0)


def harmonic_series(fundamental: float, k: int = DEFAULT_OVERTONE_COUNT) -> OvertoneSeries:
    """A fundamental with k harmonic overtones [2f, 3f, ..., (k+1)f]."""
    if fundamental <= 0:
        raise ValueError("fundamental must be positive")
    if k < 1:
        raise ValueError("need at least one overtone")
    return OvertoneSeries(fundamental, tuple(fundamental * (i + 2) for i in range(k)))


def detune(series: OvertoneSeries, loss: float, cap: float = LOSS_CAP) -> DetunedSeries:
    """Scale every overtone by (1 + min(loss, cap)); the fundamental is untouched.

    At loss 0 the result equals the input series exactly, which is the
    audible "well-tuned" end state of a converged fit.
    """
    if loss < 0:
        raise ValueError("loss must be non-negative")
    applied = min(loss, cap)
    factor = 1.0 + applied
    return DetunedSeries(
        series.fundamental, tuple(f * factor for f in series.overtones), applied
    )
