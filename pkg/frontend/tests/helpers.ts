/** Shared builders for wire-shaped snapshot messages. */

export function wireDistortion(overrides: Record<string, unknown> = {}): Record<string, unknown> {
  return {
    rgb_offsets: [
      [0, 0],
      [0, 0],
      [0, 0],
    ],
    displacement_phase: [1, 1],
    scale: 40,
    ...overrides,
  };
}

export function wireSnapshot(overrides: Record<string, unknown> = {}): Record<string, unknown> {
  return {
    type: 'snapshot',
    timestamp_ms: 1234.5,
    part: 1,
    kind: 'cubic',
    target: [0.1, -0.2, 0.3, -0.4],
    theta: [0, 0, 0, 0],
    loss: 0.25,
    grad: [0.01, -0.02, 0.03, -0.04],
    step_count: 7,
    distortion: wireDistortion(),
    detuned_notes: [
      {
        note: 69,
        fundamental: 440,
        overtones: [880, 1320, 1760],
        loss_applied: 0,
      },
    ],
    ...overrides,
  };
}

export function idleSnapshot(overrides: Record<string, unknown> = {}): Record<string, unknown> {
  return wireSnapshot({
    kind: null,
    target: [],
    theta: [],
    grad: [],
    loss: 0,
    step_count: 0,
    detuned_notes: [],
    ...overrides,
  });
}
