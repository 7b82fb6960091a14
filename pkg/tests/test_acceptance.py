"""Acceptance suite: the engine's quantitative promises, one test each.

Every test prints the measured numbers next to the required bound so a
red run documents exactly what was measured, not just that a comparison
failed.
"""

import gzip
import random
import time

from conftest import DATA_DIR, bundled_demo_bytes
from osc_ref import decode_message, float32

from gradstage import optimizer
from gradstage.optimizer import CurveKind, gradient_check_sweep, loss, random_state, step
from gradstage.performance import (
    NoteEvent,
    advance_part,
    compute_distortion,
    handle_event,
    identity_distortion,
    new_engine,
    tick,
)
from gradstage.replay import replay_to_bytes
from gradstage.script import parse_script
from gradstage.snapshot import build_snapshot
from gradstage.sonics import detune, harmonic_series
from gradstage.osc import encode_osc


def test_gradient_oracle():
    """Analytic gradients match central finite differences (h=1e-6) within
    rel 1e-6 / abs 1e-9 over 100 random states per family, in under 5 s."""
    t0 = time.perf_counter()
    failures = gradient_check_sweep(trials=100, seed=0, h=1e-6, rel_tol=1e-6, abs_tol=1e-9)
    elapsed = time.perf_counter() - t0
    print(f"gradient oracle: {len(failures)} mismatches, {elapsed:.2f}s (bound 5s)")
    for failure in failures[:10]:
        print(" ", failure)
    assert failures == []
    assert elapsed < 5.0


def _count_converged(kind, threshold, max_steps, alpha=0.1, seeds=100):
    converged = 0
    for seed in range(seeds):
        state = random_state(kind, random.Random(seed))
        for _ in range(max_steps):
            state = step(state, alpha)
            if loss(state).loss < threshold:
                converged += 1
                break
    return converged


def test_convergence():
    """With defaults, cubic fits reach loss < 1e-3 within 500 steps in at
    least 95 of 100 seeds; Lissajous fits reach loss < 1e-2 within 2000
    steps in at least 90 of 100. Total runtime under 30 s."""
    t0 = time.perf_counter()
    cubic = _count_converged(CurveKind.CUBIC, 1e-3, 500)
    liss = _count_converged(CurveKind.LISSAJOUS, 1e-2, 2000)
    elapsed = time.perf_counter() - t0
    print(f"cubic convergence: {cubic}/100 seeds (bound >= 95)")
    print(f"lissajous convergence: {liss}/100 seeds (bound >= 90)")
    print(f"convergence runtime: {elapsed:.2f}s (bound 30s)")
    assert elapsed < 30.0
    assert liss >= 90, f"lissajous converged in {liss}/100 seeds, need 90"
    assert cubic >= 95, f"cubic converged in {cubic}/100 seeds, need 95"


def test_descent_property():
    """A single step at alpha = 1e-3 never increases the loss (tol 1e-12)
    across 100 random states."""
    rng = random.Random(2024)
    worst = 0.0
    for trial in range(100):
        kind = CurveKind.CUBIC if trial % 2 == 0 else CurveKind.LISSAJOUS
        state = random_state(kind, rng)
        stepped = step(state, 1e-3)
        after = loss(stepped).loss
        worst = max(worst, after - stepped.last_loss)
        assert after <= stepped.last_loss + 1e-12
    print(f"descent property: worst increase {worst:.3e} (tol 1e-12)")


def test_detune_arithmetic():
    """Loss 0 leaves the A-series untouched bit for bit; loss 0.5 lands on
    exactly 1320/1980/2640."""
    series = harmonic_series(440.0, 3)
    assert series.overtones == (880.0, 1320.0, 1760.0)
    untouched = detune(series, 0.0)
    assert untouched.fundamental == 440.0
    assert untouched.overtones == series.overtones
    halved = detune(series, 0.5)
    assert halved.fundamental == 440.0
    assert halved.overtones == (1320.0, 1980.0, 2640.0)
    print("detune arithmetic: identity at loss 0, exact at loss 0.5")


def test_golden_replay():
    """The bundled demo replays to a byte-identical action log, run to run
    and against the stored golden artifact."""
    events = parse_script(bundled_demo_bytes())
    first = replay_to_bytes(events)
    second = replay_to_bytes(events)
    assert first == second
    golden = gzip.decompress((DATA_DIR / "demo_golden.jsonl.gz").read_bytes())
    print(
        f"golden replay: {len(first.splitlines())} lines, "
        f"{len(first)} bytes, fresh runs identical, matches stored artifact: "
        f"{first == golden}"
    )
    assert first == golden


def test_osc_conformance():
    """Every emitted OSC message decodes under an independent minimal
    decoder and is 4-byte aligned."""
    state = new_engine()
    snapshots = [build_snapshot(state, 0.0)]
    events = parse_script(bundled_demo_bytes())
    for i, ev in enumerate(events[:120]):
        if ev.kind.value == "advance":
            state = advance_part(state)
        elif ev.kind.value in ("on", "off"):
            state, _ = handle_event(
                state, NoteEvent(ev.note, ev.velocity, ev.kind.value == "on", float(ev.at_ms))
            )
        if i % 3 == 0:
            state, _ = tick(state, 16.0)
            snapshots.append(build_snapshot(state, state.now_ms))

    checked = 0
    for snap in snapshots:
        for buf in encode_osc(snap):
            assert len(buf) % 4 == 0
            address, args = decode_message(buf)
            if address == "/ldd/part":
                assert args == [snap.part]
            elif address == "/ldd/loss":
                assert args == [float32(snap.loss)]
            elif address == "/ldd/grad":
                assert args == [float32(g) for g in snap.grad]
            elif address == "/ldd/detune":
                note = args[0]
                series = dict(snap.detuned_notes)[note]
                assert args[1] == float32(series.fundamental)
                assert args[2:] == [float32(f) for f in series.overtones]
            else:
                raise AssertionError(f"unexpected address {address}")
            checked += 1
    print(f"osc conformance: {checked} messages decoded, all 4-byte aligned")
    assert checked > 50


def test_zero_gradient_distortion_identity():
    """A zero gradient maps to zero channel offsets and phase (1, 1)."""
    params = compute_distortion((0.0, 0.0, 0.0, 0.0), 40.0)
    assert params.rgb_offsets == ((0.0, 0.0), (0.0, 0.0), (0.0, 0.0))
    assert params.displacement_phase == (1.0, 1.0)
    assert params == identity_distortion(40.0)
    print("zero-gradient distortion: exact identity")
