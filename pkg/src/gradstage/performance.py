"""The four-part performance state machine.

Note events are the only steering input: bass notes (below the split)
spawn fresh targets, upper notes trigger gradient steps and sound detuned
by the current loss, and held bass chords drive continuous stepping.  All
transitions are pure functions over an immutable EngineState so replays
are exact; the seeded RNG inside the state is advanced only by these
functions on the engine's single event thread.
"""

from __future__ import annotations

import enum
import logging
import math
import random
from dataclasses import dataclass, field, replace

from . import optimizer, sonics
from .curves import (
    CubicParams,
    LissajousParams,
    sample_target_cubic,
    sample_target_lissajous,
)
from .optimizer import CurveKind, LearnState, NonFiniteUpdate

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class NoteEvent:
    note: int
    velocity: int
    on: bool
    timestamp_ms: float


class PerformancePart(enum.IntEnum):
    PART1 = 1
    PART2 = 2
    PART3 = 3
    PART4 = 4

    def next(self) -> "PerformancePart":
        return PerformancePart(self % 4 + 1)

    @property
    def kind(self) -> CurveKind:
        """Parts 1/4 train cubics, parts 2/3 Lissajous knots."""
        if self in (PerformancePart.PART1, PerformancePart.PART4):
            return CurveKind.CUBIC
        return CurveKind.LISSAJOUS

    @property
    def chord_driven(self) -> bool:
        return self in (PerformancePart.PART2, PerformancePart.PART3)


@dataclass(frozen=True)
class DistortionParams:
    """Per-frame distortion control derived from the latest gradient.

    rgb_offsets are pixel translations for the R, G, B channels (first
    distortion); displacement_phase is the literal (cos g1, cos g2) pair
    the second distortion displaces pixels by; scale is the renderer gain.
    """

    rgb_offsets: tuple[tuple[float, float], tuple[float, float], tuple[float, float]]
    displacement_phase: tuple[float, float]
    scale: float


@dataclass(frozen=True)
class EngineConfig:
    split_note: int = 60
    chord_min_size: int = 3
    chord_window_ms: float = 50.0
    alpha: float = 0.1
    steps_per_second_held: float = 30.0
    overtone_count: int = 3
    distortion_gain: float = 40.0
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.split_note <= 127:
            raise ValueError("split_note must be a MIDI note 0..127")
        if self.chord_min_size < 2:
            raise ValueError("chord_min_size must be >= 2")
        for name in ("chord_window_ms", "alpha", "steps_per_second_held", "distortion_gain"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.overtone_count < 1:
            raise ValueError("overtone_count must be >= 1")


# Actions emitted toward the bridge.


@dataclass(frozen=True)
class NewTarget:
    kind: CurveKind
    params: CubicParams | LissajousParams


@dataclass(frozen=True)
class NewApproximant:
    kind: CurveKind
    theta: tuple[float, ...]


@dataclass(frozen=True)
class Detune:
    note: int
    series: sonics.DetunedSeries
    loss: float


@dataclass(frozen=True)
class SpawnBubble:
    note: int
    velocity: int


@dataclass(frozen=True)
class DistortionUpdate:
    params: DistortionParams


Action = NewTarget | NewApproximant | Detune | SpawnBubble | DistortionUpdate


def compute_distortion(grad: tuple[float, ...], gain: float) -> DistortionParams:
    """Map the first partials to channel offsets and a displacement phase.

    R shifts horizontally with g1, G vertically with g2, B diagonally with
    g3 (zero when the gradient has fewer than three components).  A zero
    gradient therefore leaves all three channels exactly superimposed.  The
    phase pair is literally (cos g1, cos g2).
    """
    if len(grad) < 2:
        raise ValueError("need at least two gradient components")
    g1, g2 = grad[0], grad[1]
    g3 = grad[2] if len(grad) >= 3 else 0.0
    return DistortionParams(
        rgb_offsets=((gain * g1, 0.0), (0.0, gain * g2), (gain * g3, gain * g3)),
        displacement_phase=(math.cos(g1), math.cos(g2)),
        scale=gain,
    )


def identity_distortion(gain: float) -> DistortionParams:
    return compute_distortion((0.0, 0.0, 0.0), gain)


@dataclass(frozen=True)
class EngineState:
    part: PerformancePart
    learn: LearnState | None
    held_chord: frozenset[int]
    chord_onsets: tuple[tuple[float, int], ...]
    chord_active: bool
    sounding: frozenset[int]
    detune_out: dict[int, sonics.DetunedSeries]
    distortion: DistortionParams
    step_accum: float
    now_ms: float
    rng: random.Random = field(repr=False)
    config: EngineConfig


def new_engine(config: EngineConfig | None = None) -> EngineState:
    config = config or EngineConfig()
    return EngineState(
        part=PerformancePart.PART1,
        learn=None,
        held_chord=frozenset(),
        chord_onsets=(),
        chord_active=False,
        sounding=frozenset(),
        detune_out={},
        distortion=identity_distortion(config.distortion_gain),
        step_accum=0.0,
        now_ms=0.0,
        rng=random.Random(config.seed),
        config=config,
    )


def advance_part(state: EngineState) -> EngineState:
    """Move to the next part and clear the episode: no target until a new
    triggering event arrives."""
    return replace(
        state,
        part=state.part.next(),
        learn=None,
        held_chord=frozenset(),
        chord_onsets=(),
        chord_active=False,
        detune_out={},
        distortion=identity_distortion(state.config.distortion_gain),
        step_accum=0.0,
    )


def _resample(state: EngineState) -> tuple[LearnState, list[Action]]:
    kind = state.part.kind
    if kind is CurveKind.CUBIC:
        target: CubicParams | LissajousParams = sample_target_cubic(state.rng)
    else:
        target = sample_target_lissajous(state.rng)
    theta = optimizer.init_theta(kind, state.rng)
    learn = optimizer.new_state(kind, target, theta)
    return learn, [NewTarget(kind, target), NewApproximant(kind, theta)]


def _recover(state: EngineState, learn: LearnState) -> tuple[LearnState, Action]:
    # Divergence recovery: fresh theta, same target.
    theta = optimizer.init_theta(learn.kind, state.rng)
    fresh = optimizer.new_state(learn.kind, learn.target, theta, learn.grid)
    return fresh, NewApproximant(learn.kind, theta)


def _detune_for(state: EngineState, note: int, loss: float) -> sonics.DetunedSeries:
    series = sonics.harmonic_series(sonics.midi_to_hz(note), state.config.overtone_count)
    return sonics.detune(series, loss)


def handle_event(state: EngineState, ev: NoteEvent) -> tuple[EngineState, list[Action]]:
    """Feed one note event through the current part's rules."""
    if not (0 <= ev.note <= 127 and 0 <= ev.velocity <= 127):
        log.debug("ignoring malformed note event %r", ev)
        return state, []
    now = max(state.now_ms, ev.timestamp_ms)
    state = replace(state, now_ms=now)
    if ev.note < state.config.split_note:
        return _handle_bass(state, ev)
    return _handle_upper(state, ev)


def _handle_bass(state: EngineState, ev: NoteEvent) -> tuple[EngineState, list[Action]]:
    cfg = state.config
    if ev.on:
        held = state.held_chord | {ev.note}
        if not state.part.chord_driven:
            # Parts 1/4: every bass note starts a fresh cubic episode.
            learn, actions = _resample(state)
            return replace(state, held_chord=held, learn=learn), actions
        cutoff = state.now_ms - cfg.chord_window_ms
        onsets = tuple(o for o in state.chord_onsets if o[0] >= cutoff)
        onsets += ((state.now_ms, ev.note),)
        state = replace(state, held_chord=held, chord_onsets=onsets)
        if not state.chord_active and len(onsets) >= cfg.chord_min_size:
            learn, actions = _resample(state)
            return replace(state, learn=learn, chord_active=True), actions
        return state, []

    held = state.held_chord - {ev.note}
    state = replace(state, held_chord=held)
    if state.chord_active and len(held) < cfg.chord_min_size:
        # Chord released: continuous stepping stops.
        state = replace(state, chord_active=False, step_accum=0.0)
    return state, []


def _handle_upper(state: EngineState, ev: NoteEvent) -> tuple[EngineState, list[Action]]:
    if not ev.on:
        if ev.note in state.sounding:
            detunes = dict(state.detune_out)
            detunes.pop(ev.note, None)
            state = replace(
                state, sounding=state.sounding - {ev.note}, detune_out=detunes
            )
        return state, []

    state = replace(state, sounding=state.sounding | {ev.note})
    learn = state.learn
    if learn is None:
        log.debug("upper note %d with no active target", ev.note)
        return state, []

    actions: list[Action] = []
    if not state.part.chord_driven:
        # Parts 1/4: the note itself is a gradient step.
        try:
            learn = optimizer.step(learn, state.config.alpha)
        except NonFiniteUpdate:
            learn, recovery = _recover(state, learn)
            return replace(state, learn=learn), [recovery]
    series = _detune_for(state, ev.note, learn.last_loss)
    detunes = dict(state.detune_out)
    detunes[ev.note] = series
    actions.append(Detune(ev.note, series, learn.last_loss))
    if state.part is PerformancePart.PART4:
        actions.append(SpawnBubble(ev.note, ev.velocity))
    return replace(state, learn=learn, detune_out=detunes), actions


def tick(state: EngineState, dt_ms: float) -> tuple[EngineState, list[Action]]:
    """Advance time: run held-chord stepping and refresh the distortion.

    In parts 2/3 with an active chord, performs floor-accumulated steps at
    steps_per_second_held (the fractional remainder carries across ticks)
    and re-detunes every sounding upper note once per step.  While no
    episode is active nothing is emitted.
    """
    if dt_ms < 0:
        raise ValueError("dt_ms must be non-negative")
    state = replace(state, now_ms=state.now_ms + dt_ms)
    if state.learn is None:
        return state, []

    cfg = state.config
    actions: list[Action] = []
    learn = state.learn
    detunes = state.detune_out
    accum = state.step_accum
    if state.part.chord_driven and state.chord_active:
        accum += dt_ms * cfg.steps_per_second_held / 1000.0
        nsteps = math.floor(accum)
        accum -= nsteps
        for _ in range(nsteps):
            try:
                learn = optimizer.step(learn, cfg.alpha)
            except NonFiniteUpdate:
                learn, recovery = _recover(state, learn)
                actions.append(recovery)
                break
            if state.sounding:
                detunes = dict(detunes)
                for note in sorted(state.sounding):
                    series = _detune_for(state, note, learn.last_loss)
                    detunes[note] = series
                    actions.append(Detune(note, series, learn.last_loss))

    distortion = compute_distortion(learn.last_grad, cfg.distortion_gain)
    actions.append(DistortionUpdate(distortion))
    return (
        replace(
            state,
            learn=learn,
            detune_out=detunes,
            distortion=distortion,
            step_accum=accum,
        ),
        actions,
    )
