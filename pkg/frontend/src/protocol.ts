/**
 * Wire protocol between the engine bridge and this UI.
 *
 * Inbound: one JSON snapshot per publish tick. Outbound: exactly two
 * message shapes, note and advance_part. Nothing else ever mutates the
 * engine, so both builders live here next to the parser.
 */

export type CurveKind = 'cubic' | 'lissajous';

export interface Distortion {
  /** Per-channel (x, y) sample offsets in pixels: R, G, B. */
  rgbOffsets: [number, number][];
  displacementPhase: [number, number];
  scale: number;
}

export interface DetunedNote {
  note: number;
  fundamental: number;
  overtones: number[];
  lossApplied: number;
}

export interface UiSnapshot {
  timestampMs: number;
  part: number;
  kind: CurveKind | null;
  target: number[];
  theta: number[];
  loss: number;
  grad: number[];
  stepCount: number;
  distortion: Distortion;
  detunedNotes: DetunedNote[];
}

export class ProtocolError extends Error {}

function fail(message: string): never {
  throw new ProtocolError(message);
}

function asRecord(value: unknown, what: string): Record<string, unknown> {
  if (typeof value !== 'object' || value === null || Array.isArray(value)) {
    fail(`${what} is not an object`);
  }
  return value as Record<string, unknown>;
}

function finiteNumber(value: unknown, what: string): number {
  if (typeof value !== 'number' || !Number.isFinite(value)) {
    fail(`${what} is not a finite number`);
  }
  return value;
}

function numberArray(value: unknown, what: string): number[] {
  if (!Array.isArray(value)) fail(`${what} is not an array`);
  return value.map((entry, i) => finiteNumber(entry, `${what}[${i}]`));
}

function pair(value: unknown, what: string): [number, number] {
  const arr = numberArray(value, what);
  if (arr.length !== 2) fail(`${what} must have 2 entries, got ${arr.length}`);
  return [arr[0], arr[1]];
}

function parseDistortion(value: unknown): Distortion {
  const rec = asRecord(value, 'distortion');
  if (!Array.isArray(rec.rgb_offsets) || rec.rgb_offsets.length !== 3) {
    fail('distortion.rgb_offsets must have 3 pairs');
  }
  const rgbOffsets = rec.rgb_offsets.map((entry, i) =>
    pair(entry, `distortion.rgb_offsets[${i}]`),
  );
  const displacementPhase = pair(rec.displacement_phase, 'distortion.displacement_phase');
  const scale = finiteNumber(rec.scale, 'distortion.scale');
  if (scale <= 0) fail('distortion.scale must be positive');
  return { rgbOffsets, displacementPhase, scale };
}

function parseDetunedNote(value: unknown, i: number): DetunedNote {
  const rec = asRecord(value, `detuned_notes[${i}]`);
  const note = finiteNumber(rec.note, `detuned_notes[${i}].note`);
  if (!Number.isInteger(note) || note < 0 || note > 127) {
    fail(`detuned_notes[${i}].note out of MIDI range: ${note}`);
  }
  const fundamental = finiteNumber(rec.fundamental, `detuned_notes[${i}].fundamental`);
  if (fundamental <= 0) fail(`detuned_notes[${i}].fundamental must be positive`);
  const lossApplied = finiteNumber(rec.loss_applied, `detuned_notes[${i}].loss_applied`);
  if (lossApplied < 0) fail(`detuned_notes[${i}].loss_applied must be >= 0`);
  return {
    note,
    fundamental,
    overtones: numberArray(rec.overtones, `detuned_notes[${i}].overtones`),
    lossApplied,
  };
}

/** Vector lengths each kind must carry: [theta, target, grad]. */
const KIND_LENGTHS: Record<string, [number, number, number]> = {
  cubic: [4, 4, 4],
  lissajous: [3, 6, 3],
};

/**
 * Validate one inbound snapshot message. Throws ProtocolError on any
 * shape violation, including vector lengths inconsistent with the
 * declared kind; callers surface that as the error badge.
 */
export function parseSnapshot(raw: unknown): UiSnapshot {
  const rec = asRecord(raw, 'snapshot');
  if (rec.type !== 'snapshot') fail(`unexpected message type ${String(rec.type)}`);

  const timestampMs = finiteNumber(rec.timestamp_ms, 'timestamp_ms');
  if (timestampMs < 0) fail('timestamp_ms must be >= 0');

  const part = finiteNumber(rec.part, 'part');
  if (!Number.isInteger(part) || part < 1 || part > 4) fail(`part out of range: ${part}`);

  const kind = rec.kind;
  if (kind !== null && kind !== 'cubic' && kind !== 'lissajous') {
    fail(`unknown kind ${String(kind)}`);
  }

  const theta = numberArray(rec.theta, 'theta');
  const target = numberArray(rec.target, 'target');
  const grad = numberArray(rec.grad, 'grad');
  if (kind === null) {
    if (theta.length || target.length || grad.length) {
      fail('kind null requires empty theta/target/grad');
    }
  } else {
    const [nTheta, nTarget, nGrad] = KIND_LENGTHS[kind];
    if (theta.length !== nTheta) fail(`${kind} theta must have ${nTheta} entries`);
    if (target.length !== nTarget) fail(`${kind} target must have ${nTarget} entries`);
    if (grad.length !== nGrad) fail(`${kind} grad must have ${nGrad} entries`);
  }

  const stepCount = finiteNumber(rec.step_count, 'step_count');
  if (!Number.isInteger(stepCount) || stepCount < 0) fail('step_count must be a non-negative integer');

  if (!Array.isArray(rec.detuned_notes)) fail('detuned_notes is not an array');

  return {
    timestampMs,
    part,
    kind,
    target,
    theta,
    loss: finiteNumber(rec.loss, 'loss'),
    grad,
    stepCount,
    distortion: parseDistortion(rec.distortion),
    detunedNotes: rec.detuned_notes.map(parseDetunedNote),
  };
}

export function noteMessage(on: boolean, note: number, velocity: number): string {
  return JSON.stringify({ type: 'note', on, note, velocity });
}

export function advancePartMessage(): string {
  return JSON.stringify({ type: 'advance_part' });
}
