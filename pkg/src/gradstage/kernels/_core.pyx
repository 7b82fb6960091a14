# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled loss/gradient kernels.

Mirrors kernels/reference.py loop-for-loop.  Built without fast-math and
with -ffp-contract=off so results stay bit-identical to the pure-Python
reference; see that module for the formulas.
"""

from libc.math cimport cos, sin


def cubic_loss_grad(theta, target, double[::1] xs):
    cdef double a = theta[0], b = theta[1], c = theta[2], d = theta[3]
    cdef double ta = target[0], tb = target[1], tc = target[2], td = target[3]
    cdef double acc = 0.0, ga = 0.0, gb = 0.0, gc = 0.0, gd = 0.0
    cdef double x, x2, x3, r
    cdef Py_ssize_t i, n = xs.shape[0]
    for i in range(n):
        x = xs[i]
        x2 = x * x
        x3 = x2 * x
        r = (a * x3 + b * x2 + c * x + d) - (ta * x3 + tb * x2 + tc * x + td)
        acc += r * r
        ga += r * x3
        gb += r * x2
        gc += r * x
        gd += r
    cdef double fn = <double>n
    cdef double scale = 2.0 / fn
    return acc / fn, (scale * ga, scale * gb, scale * gc, scale * gd)


def lissajous_loss_grad(theta, target_phases, multipliers, double[::1] ts):
    cdef double pa = theta[0], pb = theta[1], pc = theta[2]
    cdef double qa = target_phases[0], qb = target_phases[1], qc = target_phases[2]
    cdef double nx = multipliers[0], ny = multipliers[1], nz = multipliers[2]
    cdef double acc = 0.0, ga = 0.0, gb = 0.0, gc = 0.0
    cdef double t, ax, ay, az, rx, ry, rz
    cdef Py_ssize_t i, n = ts.shape[0]
    for i in range(n):
        t = ts[i]
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
    cdef double fn = <double>n
    cdef double scale = 2.0 / fn
    return acc / fn, (scale * ga, scale * gb, scale * gc)
