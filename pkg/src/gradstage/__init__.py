"""gradstage: a performance engine that plays gradient descent like an instrument.

Note events drive optimization on two curve families (cubic polynomials and
Lissajous knots).  The loss and gradient of each step are broadcast as sound
parameters (overtone detuning) and video parameters (channel offsets, phase,
scale) over OSC and a WebSocket state stream.
"""

from .curves import (
    CUBIC_GRID,
    LISSAJOUS_GRID,
    CubicParams,
    LissajousParams,
    SampleGrid,
    eval_cubic,
    eval_lissajous,
    sample_points,
    sample_target_cubic,
    sample_target_lissajous,
)
from .optimizer import (
    DEFAULT_ALPHA,
    CurveKind,
    LearnState,
    LossReport,
    NonFiniteUpdate,
    finite_diff_gradient,
    gradient_check_sweep,
    init_theta,
    loss,
    new_state,
    random_state,
    step,
)
from .performance import (
    Detune,
    DistortionParams,
    DistortionUpdate,
    EngineConfig,
    EngineState,
    NewApproximant,
    NewTarget,
    NoteEvent,
    PerformancePart,
    SpawnBubble,
    advance_part,
    compute_distortion,
    handle_event,
    identity_distortion,
    new_engine,
    tick,
)
from .sonics import (
    DetunedSeries,
    LOSS_CAP,
    OvertoneSeries,
    detune,
    harmonic_series,
    midi_to_hz,
)

__version__ = "1.0.0"

__all__ = [
    "CUBIC_GRID",
    "CubicParams",
    "CurveKind",
    "DEFAULT_ALPHA",
    "Detune",
    "DetunedSeries",
    "DistortionParams",
    "DistortionUpdate",
    "EngineConfig",
    "EngineState",
    "LISSAJOUS_GRID",
    "LOSS_CAP",
    "LearnState",
    "LissajousParams",
    "LossReport",
    "NewApproximant",
    "NewTarget",
    "NonFiniteUpdate",
    "NoteEvent",
    "OvertoneSeries",
    "PerformancePart",
    "SampleGrid",
    "SpawnBubble",
    "advance_part",
    "compute_distortion",
    "detune",
    "eval_cubic",
    "eval_lissajous",
    "finite_diff_gradient",
    "gradient_check_sweep",
    "handle_event",
    "harmonic_series",
    "identity_distortion",
    "init_theta",
    "loss",
    "midi_to_hz",
    "new_engine",
    "new_state",
    "random_state",
    "sample_points",
    "sample_target_cubic",
    "sample_target_lissajous",
    "step",
    "tick",
]
