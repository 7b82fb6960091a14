"""Pure-Python loss/gradient kernels.

Fallback for when the compiled extension is not built.  The compiled kernel
in _core.pyx mirrors these loops operation-for-operation (same evaluation
order, no fused multiply-add), so both backends return bit-identical
doubles and replay logs never depend on which one is active.
"""

from __future__ import annotations

from math import cos, sin
from typing import Sequence


def cubic_loss_grad(
    theta: Sequence[float], target: Sequence[float], xs: Sequence[float]
) -> tuple[float, tuple[float, float, float, float]]:
    """Mean-squared error and its gradient for a cubic fit.

    theta and target are (a, b, c, d); xs are the grid samples.  Returns
    (loss, (dL/da, dL/db, dL/dc, dL/dd)) with
    loss = (1/N) sum r^2 and dL/dtheta_j = (2/N) sum r * phi_j(x),
    phi = (x^3, x^2, x, 1).
    """
    a, b, c, d = theta
    ta, tb, tc, td = target
    acc = 0.0
    ga = 0.0
    gb = 0.0
    gc = 0.0
    gd = 0.0
    for x in xs:
        x2 = x * x
        x3 = x2 * x
        r = (a * x3 + b * x2 + c * x + d) - (ta * x3 + tb * x2 + tc * x + td)
        acc += r * r
        ga += r * x3
        gb += r * x2
        gc += r * x
        gd += r
    n = float(len(xs))
    scale = 2.0 / n
    return acc / n, (scale * ga, scale * gb, scale * gc, scale * gd)


def lissajous_loss_grad(
    theta: Sequence[float],
    target_phases: Sequence[float],
    multipliers: Sequence[int],
    ts: Sequence[float],
) -> tuple[float, tuple[float, float, float]]:
    """Mean-squared error and phase gradient for a Lissajous fit.

    The residual is the 3-vector of componentwise cosine differences; the
    loss averages its squared Euclidean norm over the grid.  Only the three
    phases are learnable:
    dL/dp_c = (2/N) sum r_c * (-sin(n_c*t + p_c)).
    """
    pa, pb, pc = theta
    qa, qb, qc = target_phases
    nx, ny, nz = multipliers
    acc = 0.0
    ga = 0.0
    gb = 0.0
    gc = 0.0
    for t in ts:
        ax = nx * t + pa
        rx = cos(ax) - cos(nx * t + qa)
        acc += rx * rx
        ga += rx * -sin(ax)

        ay = ny * t + pb
        ry = cos(ay) - cos(ny * t + qb)
        acc += ry * ry
        gb += ry * -sin(ay)

        az = nz * t + pc
        rz = cos(az) - cos(nz * t + qc)
        acc += rz * rz
        gc += rz * -sin(az)
    n = float(len(ts))
    scale = 2.0 / n
    return acc / n, (scale * ga, scale * gb, scale * gc)
