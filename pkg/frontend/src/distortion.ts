/**
 * The two video distortions, implemented twice from one set of rules:
 * a CPU reference that tests can read back pixel-for-pixel, and GLSL
 * sources (see gl.ts) that mirror the reference texel math. Both use
 * nearest sampling with clamp-to-edge so zero parameters reproduce
 * the input exactly, with no filtering blur to spoil the identity.
 *
 * Distortion 1 translates the R, G and B channels independently: an
 * offset of (20, 0) on R moves red content 20 px right, so the output
 * samples the input at position - offset.
 *
 * Distortion 2 maps the (already channel-shifted) frame onto bubbles:
 * inside each bubble disc, texels are displaced by gain * phase with
 * a non-negative angular weight, so phase (-1, 0) displaces purely
 * along x in the negative direction, and gain 0 is the identity.
 */

export interface Frame {
  data: Uint8ClampedArray;
  width: number;
  height: number;
}

export interface PixelBubble {
  centerX: number;
  centerY: number;
  radiusPx: number;
}

export interface DistortionInput {
  /** Per-channel (x, y) offsets in pixels: R, G, B. */
  rgbOffsets: [number, number][];
  bubbles: PixelBubble[];
  displacementPhase: [number, number];
  /** Displacement amplitude in pixels; 0 disables distortion 2. */
  gain: number;
  /** Animation clock for the bubble surface wobble, in radians. */
  wobble: number;
}

export function makeFrame(width: number, height: number): Frame {
  return { data: new Uint8ClampedArray(width * height * 4), width, height };
}

export function cloneFrame(frame: Frame): Frame {
  return { data: new Uint8ClampedArray(frame.data), width: frame.width, height: frame.height };
}

function clampIndex(value: number, max: number): number {
  if (value < 0) return 0;
  if (value > max) return max;
  return value;
}

/** Nearest texel of one channel, clamped to the frame edge. */
export function sampleChannel(frame: Frame, x: number, y: number, channel: number): number {
  const sx = clampIndex(Math.round(x), frame.width - 1);
  const sy = clampIndex(Math.round(y), frame.height - 1);
  return frame.data[(sy * frame.width + sx) * 4 + channel];
}

/** Distortion 1: translate each color channel by its own offset. */
export function applyRgbShift(frame: Frame, rgbOffsets: [number, number][]): Frame {
  const out = makeFrame(frame.width, frame.height);
  for (let y = 0; y < frame.height; y++) {
    for (let x = 0; x < frame.width; x++) {
      const base = (y * frame.width + x) * 4;
      for (let channel = 0; channel < 3; channel++) {
        const [ox, oy] = rgbOffsets[channel];
        out.data[base + channel] = sampleChannel(frame, x - ox, y - oy, channel);
      }
      out.data[base + 3] = frame.data[base + 3];
    }
  }
  return out;
}

/**
 * Texel displacement at one bubble surface point. The angular weights
 * are non-negative, so the displacement direction is exactly the sign
 * of gain * phase on each axis.
 */
export function bubbleDisplacement(
  angle: number,
  phase: [number, number],
  gain: number,
  wobble: number,
): [number, number] {
  const wx = (1 + Math.sin(2 * angle + wobble)) / 2;
  const wy = (1 + Math.cos(3 * angle + wobble)) / 2;
  return [gain * phase[0] * wx, gain * phase[1] * wy];
}

/**
 * Distortion 2: project the frame onto each bubble disc with displaced
 * texels. Displacing content by d means sampling at position - d.
 */
export function applyBubbles(
  frame: Frame,
  bubbles: PixelBubble[],
  phase: [number, number],
  gain: number,
  wobble: number,
): Frame {
  const out = cloneFrame(frame);
  for (const bubble of bubbles) {
    const r = bubble.radiusPx;
    const x0 = Math.max(0, Math.floor(bubble.centerX - r));
    const x1 = Math.min(frame.width - 1, Math.ceil(bubble.centerX + r));
    const y0 = Math.max(0, Math.floor(bubble.centerY - r));
    const y1 = Math.min(frame.height - 1, Math.ceil(bubble.centerY + r));
    for (let y = y0; y <= y1; y++) {
      for (let x = x0; x <= x1; x++) {
        const dx = x - bubble.centerX;
        const dy = y - bubble.centerY;
        if (dx * dx + dy * dy > r * r) continue;
        const [mx, my] = bubbleDisplacement(Math.atan2(dy, dx), phase, gain, wobble);
        const base = (y * frame.width + x) * 4;
        for (let channel = 0; channel < 3; channel++) {
          out.data[base + channel] = sampleChannel(frame, x - mx, y - my, channel);
        }
      }
    }
  }
  return out;
}

/** Full pipeline: channel shift, then bubbles over the shifted frame. */
export function composeFrame(frame: Frame, input: DistortionInput): Frame {
  const shifted = applyRgbShift(frame, input.rgbOffsets);
  if (!input.bubbles.length) return shifted;
  return applyBubbles(shifted, input.bubbles, input.displacementPhase, input.gain, input.wobble);
}

/**
 * Displacement amplitude for distortion 2, derived from the snapshot:
 * the engine's distortion scale tempered by how badly the fit is off.
 * Converged states (loss near 0) leave the bubbles calm.
 */
export function displacementGain(scale: number, loss: number): number {
  return scale * Math.min(Math.abs(loss), 1);
}
