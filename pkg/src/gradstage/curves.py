"""Target function families: cubic polynomials and Lissajous knots.

Both families are cheap to evaluate and converge quickly under plain
gradient descent, which is what makes their training dynamics usable as a
live performance signal.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

# Sampling defaults for the expectation grids: cubics are compared over
# x in [-1, 1), knots over one full period t in [0, 2*pi).
CUBIC_DOMAIN = (-1.0, 1.0)
LISSAJOUS_DOMAIN = (0.0, TWO_PI)
DEFAULT_GRID_COUNT = 64

COEFF_RANGE = (-1.0, 1.0)
FREQ_MULTIPLIER_RANGE = (1, 7)


@dataclass(frozen=True)
class CubicParams:
    """Coefficients of a*x^3 + b*x^2 + c*x + d."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"cubic coefficient {name} must be finite")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class LissajousParams:
    """Integer frequency multipliers plus one phase per axis.

    Only the phases (pa, pb, pc) are ever learned; nx, ny, nz stay fixed
    for the lifetime of a target.
    """

    nx: int
    ny: int
    nz: int
    pa: float
    pb: float
    pc: float

    def __post_init__(self) -> None:
        for name in ("nx", "ny", "nz"):
            if getattr(self, name) < 1:
                raise ValueError(f"frequency multiplier {name} must be >= 1")
        for name in ("pa", "pb", "pc"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"phase {name} must be finite")

    def multipliers(self) -> tuple[int, int, int]:
        return (self.nx, self.ny, self.nz)

    def phases(self) -> tuple[float, float, float]:
        return (self.pa, self.pb, self.pc)


@dataclass(frozen=True)
class SampleGrid:
    """Uniform half-open grid: count points from lo (inclusive) to hi (exclusive).

    Excluding hi avoids double-weighting t = 0 == 2*pi on periodic domains.
    """

    lo: float
    hi: float
    count: int

    def __post_init__(self) -> None:
        if not (self.lo < self.hi):
            raise ValueError("grid requires lo < hi")
        if self.count < 2:
            raise ValueError("grid requires count >= 2")


CUBIC_GRID = SampleGrid(*CUBIC_DOMAIN, DEFAULT_GRID_COUNT)
LISSAJOUS_GRID = SampleGrid(*LISSAJOUS_DOMAIN, DEFAULT_GRID_COUNT)


def eval_cubic(p: CubicParams, x: float) -> float:
    """Evaluate a*x^3 + b*x^2 + c*x + d (Horner form)."""
    return ((p.a * x + p.b) * x + p.c) * x + p.d


def eval_lissajous(p: LissajousParams, t: float) -> tuple[float, float, float]:
    """Evaluate <cos(nx*t + pa), cos(ny*t + pb), cos(nz*t + pc)>."""
    return (
        math.cos(p.nx * t + p.pa),
        math.cos(p.ny * t + p.pb),
        math.cos(p.nz * t + p.pc),
    )


def sample_target_cubic(rng: random.Random) -> CubicParams:
    """Draw a fresh target cubic, each coefficient uniform in [-1, 1]."""
    lo, hi = COEFF_RANGE
    return CubicParams(
        rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)
    )


def sample_target_lissajous(rng: random.Random) -> LissajousParams:
    """Draw a fresh target knot: multipliers uniform in {1..7}, phases in [0, 2*pi)."""
    n_lo, n_hi = FREQ_MULTIPLIER_RANGE
    return LissajousParams(
        rng.randint(n_lo, n_hi),
        rng.randint(n_lo, n_hi),
        rng.randint(n_lo, n_hi),
        rng.uniform(0.0, TWO_PI),
        rng.uniform(0.0, TWO_PI),
        rng.uniform(0.0, TWO_PI),
    )


def sample_points(grid: SampleGrid) -> list[float]:
    """The grid's sample points: lo + i*(hi - lo)/count for i in 0..count-1."""
    span = grid.hi - grid.lo
    return [grid.lo + i * span / grid.count for i in range(grid.count)]
