"""Immutable engine-state snapshots: the signal set published to outputs.

One snapshot carries the d+1 training signals (loss + partials) together
with everything a renderer or synth needs: curve parameters, distortion
values, and the detuned series of each sounding note.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .curves import CubicParams, LissajousParams
from .performance import DistortionParams, EngineState
from .sonics import DetunedSeries


@dataclass(frozen=True)
class StateSnapshot:
    part: int
    kind: str | None
    target: tuple[float, ...]
    theta: tuple[float, ...]
    loss: float
    grad: tuple[float, ...]
    distortion: DistortionParams
    detuned_notes: tuple[tuple[int, DetunedSeries], ...]
    step_count: int
    timestamp_ms: float


def target_vector(params: CubicParams | LissajousParams) -> tuple[float, ...]:
    """Flatten target params: cubics to (a,b,c,d), knots to (nx,ny,nz,pa,pb,pc)."""
    if isinstance(params, CubicParams):
        return params.as_tuple()
    return params.multipliers() + params.phases()


def build_snapshot(state: EngineState, timestamp_ms: float) -> StateSnapshot:
    learn = state.learn
    detuned = tuple(sorted(state.detune_out.items()))
    if learn is None:
        return StateSnapshot(
            part=int(state.part),
            kind=None,
            target=(),
            theta=(),
            loss=0.0,
            grad=(),
            distortion=state.distortion,
            detuned_notes=detuned,
            step_count=0,
            timestamp_ms=timestamp_ms,
        )
    return StateSnapshot(
        part=int(state.part),
        kind=learn.kind.value,
        target=target_vector(learn.target),
        theta=learn.theta,
        loss=learn.last_loss,
        grad=learn.last_grad,
        distortion=state.distortion,
        detuned_notes=detuned,
        step_count=learn.step_count,
        timestamp_ms=timestamp_ms,
    )


def distortion_to_dict(params: DistortionParams) -> dict[str, Any]:
    return {
        "rgb_offsets": [list(pair) for pair in params.rgb_offsets],
        "displacement_phase": list(params.displacement_phase),
        "scale": params.scale,
    }


def snapshot_to_dict(snap: StateSnapshot) -> dict[str, Any]:
    """JSON-ready dict, as sent to WebSocket clients."""
    return {
        "type": "snapshot",
        "timestamp_ms": snap.timestamp_ms,
        "part": snap.part,
        "kind": snap.kind,
        "target": list(snap.target),
        "theta": list(snap.theta),
        "loss": snap.loss,
        "grad": list(snap.grad),
        "step_count": snap.step_count,
        "distortion": distortion_to_dict(snap.distortion),
        "detuned_notes": [
            {
                "note": note,
                "fundamental": series.fundamental,
                "overtones": list(series.overtones),
                "loss_applied": series.loss_applied,
            }
            for note, series in snap.detuned_notes
        ],
    }
