"""Plain gradient descent on the two curve families.

Every step yields d+1 signals (the loss plus d partials); those are the
raw material the rest of the engine turns into detuning and distortion.
Losses and gradients are computed from hand-derived closed forms, with a
central-difference oracle alongside for verification.
"""

from __future__ import annotations

import enum
import math
import random
from array import array
from dataclasses import dataclass, replace
from functools import lru_cache

from . import kernels
from .curves import (
    CUBIC_GRID,
    COEFF_RANGE,
    LISSAJOUS_GRID,
    TWO_PI,
    CubicParams,
    LissajousParams,
    SampleGrid,
    sample_points,
    sample_target_cubic,
    sample_target_lissajous,
)

DEFAULT_ALPHA = 0.1


class CurveKind(enum.Enum):
    CUBIC = "cubic"
    LISSAJOUS = "lissajous"


class NonFiniteUpdate(ArithmeticError):
    """A gradient step produced a non-finite parameter (divergence)."""


@dataclass(frozen=True)
class LossReport:
    loss: float
    grad: tuple[float, ...]


@dataclass(frozen=True)
class LearnState:
    """One learning episode: parameters, target, grid, and latest signals.

    last_loss/last_grad always describe theta as it stood when they were
    computed: at creation that is the initial theta, after step() it is the
    pre-update theta (the signals of the step just taken).
    """

    kind: CurveKind
    theta: tuple[float, ...]
    target: CubicParams | LissajousParams
    grid: SampleGrid
    step_count: int
    last_loss: float
    last_grad: tuple[float, ...]


@lru_cache(maxsize=64)
def _grid_buffer(grid: SampleGrid) -> array:
    # array('d') satisfies the compiled kernel's memoryview and iterates
    # plainly for the reference kernel.
    return array("d", sample_points(grid))


def default_grid(kind: CurveKind) -> SampleGrid:
    return CUBIC_GRID if kind is CurveKind.CUBIC else LISSAJOUS_GRID


def init_theta(kind: CurveKind, rng: random.Random) -> tuple[float, ...]:
    """Sample a fresh approximant: cubic coefficients in [-1,1], phases in [0,2*pi)."""
    if kind is CurveKind.CUBIC:
        lo, hi = COEFF_RANGE
        return tuple(rng.uniform(lo, hi) for _ in range(4))
    return tuple(rng.uniform(0.0, TWO_PI) for _ in range(3))


def _evaluate(
    kind: CurveKind,
    theta: tuple[float, ...],
    target: CubicParams | LissajousParams,
    grid: SampleGrid,
) -> LossReport:
    pts = _grid_buffer(grid)
    if kind is CurveKind.CUBIC:
        loss_value, grad = kernels.cubic_loss_grad(theta, target.as_tuple(), pts)
    else:
        loss_value, grad = kernels.lissajous_loss_grad(
            theta, target.phases(), target.multipliers(), pts
        )
    return LossReport(loss_value, grad)


def new_state(
    kind: CurveKind,
    target: CubicParams | LissajousParams,
    theta: tuple[float, ...],
    grid: SampleGrid | None = None,
) -> LearnState:
    """Start an episode at step 0 with the loss report of the initial theta."""
    expected = 4 if kind is CurveKind.CUBIC else 3
    if len(theta) != expected:
        raise ValueError(f"{kind.value} theta must have length {expected}")
    grid = grid if grid is not None else default_grid(kind)
    report = _evaluate(kind, tuple(theta), target, grid)
    return LearnState(kind, tuple(theta), target, grid, 0, report.loss, report.grad)


def loss(state: LearnState) -> LossReport:
    """Loss and analytic gradient at the state's current theta."""
    return _evaluate(state.kind, state.theta, state.target, state.grid)


def finite_diff_gradient(state: LearnState, h: float = 1e-6) -> tuple[float, ...]:
    """Central-difference gradient oracle: (L(theta+h*e_j) - L(theta-h*e_j)) / 2h."""
    if h <= 0:
        raise ValueError("h must be positive")
    grad = []
    theta = state.theta
    for j in range(len(theta)):
        plus = list(theta)
        minus = list(theta)
        plus[j] = theta[j] + h
        minus[j] = theta[j] - h
        lp = _evaluate(state.kind, tuple(plus), state.target, state.grid).loss
        lm = _evaluate(state.kind, tuple(minus), state.target, state.grid).loss
        grad.append((lp - lm) / (2.0 * h))
    return tuple(grad)


def random_state(kind: CurveKind, rng: random.Random) -> LearnState:
    """A fresh episode with sampled target and sampled theta."""
    if kind is CurveKind.CUBIC:
        target: CubicParams | LissajousParams = sample_target_cubic(rng)
    else:
        target = sample_target_lissajous(rng)
    return new_state(kind, target, init_theta(kind, rng))


def gradient_check_sweep(
    trials: int = 100,
    seed: int = 0,
    h: float = 1e-6,
    rel_tol: float = 1e-6,
    abs_tol: float = 1e-9,
) -> list[str]:
    """Compare analytic gradients against central differences on random states.

    Returns a description per failing component; empty means every one of
    `trials` states per curve family agreed within tolerance.
    """
    rng = random.Random(seed)
    failures = []
    for kind in (CurveKind.CUBIC, CurveKind.LISSAJOUS):
        for trial in range(trials):
            state = random_state(kind, rng)
            analytic = loss(state).grad
            numeric = finite_diff_gradient(state, h)
            for j, (a, f) in enumerate(zip(analytic, numeric)):
                if abs(a - f) > max(rel_tol * max(abs(a), abs(f)), abs_tol):
                    failures.append(
                        f"{kind.value} trial {trial} component {j}: "
                        f"analytic {a!r} vs finite-diff {f!r}"
                    )
    return failures


def step(state: LearnState, alpha: float = DEFAULT_ALPHA) -> LearnState:
    """One gradient-descent update: theta <- theta - alpha * grad.

    The returned state's last_loss/last_grad are the report at the
    pre-update theta, so they describe the step that was just taken.
    Raises NonFiniteUpdate when the update diverges; the caller owns
    recovery (the performance layer resamples theta).
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    report = loss(state)
    theta = tuple(t - alpha * g for t, g in zip(state.theta, report.grad))
    if not all(math.isfinite(t) for t in theta):
        raise NonFiniteUpdate(f"non-finite theta after step {state.step_count + 1}")
    return replace(
        state,
        theta=theta,
        step_count=state.step_count + 1,
        last_loss=report.loss,
        last_grad=report.grad,
    )
