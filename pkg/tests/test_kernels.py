import math
import random
from array import array

import pytest

from gradstage import kernels
from gradstage.kernels import reference

try:
    from gradstage.kernels import _core
except ImportError:
    _core = None

XS = array("d", [-1.0 + i * (2.0 / 64) for i in range(64)])
TS = array("d", [i * (2.0 * math.pi / 64) for i in range(64)])


def test_backend_reported():
    assert kernels.BACKEND in ("python", "compiled")


def test_cubic_hand_computed_case():
    # theta = 0, target = constant 1: residual is -1 at every grid point.
    loss, grad = reference.cubic_loss_grad(
        (0.0, 0.0, 0.0, 0.0), (0.0, 0.0, 0.0, 1.0), XS
    )
    assert loss == 1.0
    assert grad[3] == -2.0
    # other components: (2/N) * sum(-x^k) computed independently
    for j, power in ((0, 3), (1, 2), (2, 1)):
        expected = 2.0 / 64 * sum(-(x**power) for x in XS)
        assert math.isclose(grad[j], expected, rel_tol=1e-12, abs_tol=1e-15)


def test_cubic_zero_residual_is_exactly_zero():
    theta = (0.3, -0.7, 0.25, -0.1)
    loss, grad = reference.cubic_loss_grad(theta, theta, XS)
    assert loss == 0.0
    assert grad == (0.0, 0.0, 0.0, 0.0)


def test_cubic_against_independent_formula():
    rng = random.Random(11)
    for _ in range(50):
        theta = tuple(rng.uniform(-2, 2) for _ in range(4))
        target = tuple(rng.uniform(-1, 1) for _ in range(4))
        loss, grad = reference.cubic_loss_grad(theta, target, XS)

        def poly(coeffs, x):
            return coeffs[0] * x**3 + coeffs[1] * x**2 + coeffs[2] * x + coeffs[3]

        residuals = [poly(theta, x) - poly(target, x) for x in XS]
        n = len(XS)
        want_loss = sum(r * r for r in residuals) / n
        basis = [lambda x: x**3, lambda x: x**2, lambda x: x, lambda x: 1.0]
        want_grad = [
            2.0 / n * sum(r * phi(x) for r, x in zip(residuals, XS))
            for phi in basis
        ]
        assert math.isclose(loss, want_loss, rel_tol=1e-12)
        for g, w in zip(grad, want_grad):
            assert math.isclose(g, w, rel_tol=1e-9, abs_tol=1e-12)


def test_lissajous_perfect_fit_is_exactly_zero():
    theta = (0.5, 1.5, 2.5)
    loss, grad = reference.lissajous_loss_grad(theta, theta, (2, 3, 5), TS)
    assert loss == 0.0
    assert grad == (0.0, 0.0, 0.0)


def test_lissajous_against_independent_formula():
    rng = random.Random(12)
    for _ in range(50):
        theta = tuple(rng.uniform(0, 2 * math.pi) for _ in range(3))
        target = tuple(rng.uniform(0, 2 * math.pi) for _ in range(3))
        mult = tuple(rng.randint(1, 7) for _ in range(3))
        loss, grad = reference.lissajous_loss_grad(theta, target, mult, TS)
        n = len(TS)
        want_loss = 0.0
        want_grad = [0.0, 0.0, 0.0]
        for t in TS:
            for j in range(3):
                r = math.cos(mult[j] * t + theta[j]) - math.cos(mult[j] * t + target[j])
                want_loss += r * r
                want_grad[j] += r * -math.sin(mult[j] * t + theta[j])
        want_loss /= n
        assert math.isclose(loss, want_loss, rel_tol=1e-12, abs_tol=1e-15)
        for g, w in zip(grad, want_grad):
            assert math.isclose(g, 2.0 / n * w, rel_tol=1e-9, abs_tol=1e-12)


@pytest.mark.skipif(_core is None, reason="compiled kernel not built")
def test_backends_bit_identical():
    # Replay byte-identity requires exact float equality between backends,
    # not just closeness.
    rng = random.Random(99)
    for _ in range(300):
        theta4 = tuple(rng.uniform(-3, 3) for _ in range(4))
        target4 = tuple(rng.uniform(-1, 1) for _ in range(4))
        assert reference.cubic_loss_grad(theta4, target4, XS) == _core.cubic_loss_grad(
            theta4, target4, XS
        )
        theta3 = tuple(rng.uniform(0, 2 * math.pi) for _ in range(3))
        target3 = tuple(rng.uniform(0, 2 * math.pi) for _ in range(3))
        mult = tuple(rng.randint(1, 7) for _ in range(3))
        assert reference.lissajous_loss_grad(
            theta3, target3, mult, TS
        ) == _core.lissajous_loss_grad(theta3, target3, mult, TS)
