import { describe, expect, it } from 'vitest';

import {
  applyBubbles,
  applyRgbShift,
  bubbleDisplacement,
  composeFrame,
  displacementGain,
  Frame,
  makeFrame,
  sampleChannel,
} from '../src/distortion.js';

const W = 64;
const H = 48;

/** Synthetic ramp: every channel is a distinct function of position. */
function rampFrame(): Frame {
  const frame = makeFrame(W, H);
  for (let y = 0; y < H; y++) {
    for (let x = 0; x < W; x++) {
      const base = (y * W + x) * 4;
      frame.data[base] = (3 * x + 5 * y) % 256;
      frame.data[base + 1] = (7 * x + y) % 256;
      frame.data[base + 2] = (x + 11 * y) % 256;
      frame.data[base + 3] = 255;
    }
  }
  return frame;
}

const ZERO_OFFSETS: [number, number][] = [
  [0, 0],
  [0, 0],
  [0, 0],
];

describe('shader identity (acceptance)', () => {
  it('zero offsets and zero gain reproduce the input pixel-exactly', () => {
    const input = rampFrame();
    const out = composeFrame(input, {
      rgbOffsets: ZERO_OFFSETS,
      bubbles: [
        { centerX: 20, centerY: 20, radiusPx: 10 },
        { centerX: 50, centerY: 30, radiusPx: 8 },
      ],
      displacementPhase: [1, 1],
      gain: 0,
      wobble: 1.7,
    });
    expect(out.data).toEqual(input.data);
  });

  it('zero offsets alone are the identity for distortion 1', () => {
    const input = rampFrame();
    expect(applyRgbShift(input, ZERO_OFFSETS).data).toEqual(input.data);
  });
});

describe('applyRgbShift', () => {
  it('R=(20,0) shifts red 20 px right and leaves G, B alone', () => {
    const input = rampFrame();
    const out = applyRgbShift(input, [
      [20, 0],
      [0, 0],
      [0, 0],
    ]);
    for (let y = 0; y < H; y++) {
      for (let x = 20; x < W; x++) {
        const base = (y * W + x) * 4;
        expect(out.data[base]).toBe(input.data[(y * W + x - 20) * 4]);
        expect(out.data[base + 1]).toBe(input.data[base + 1]);
        expect(out.data[base + 2]).toBe(input.data[base + 2]);
      }
    }
  });

  it('independent offsets land each channel where readback predicts', () => {
    const input = rampFrame();
    const offsets: [number, number][] = [
      [5, 0],
      [0, -3],
      [4, 4],
    ];
    const out = applyRgbShift(input, offsets);
    for (let y = 8; y < H - 8; y++) {
      for (let x = 8; x < W - 8; x++) {
        const base = (y * W + x) * 4;
        expect(out.data[base]).toBe(input.data[(y * W + x - 5) * 4]);
        expect(out.data[base + 1]).toBe(input.data[((y + 3) * W + x) * 4 + 1]);
        expect(out.data[base + 2]).toBe(input.data[((y - 4) * W + x - 4) * 4 + 2]);
      }
    }
  });

  it('fractional offsets snap to the nearest texel', () => {
    const input = rampFrame();
    const out = applyRgbShift(input, [
      [1.4, 0],
      [0, 0],
      [0, 0],
    ]);
    const base = (10 * W + 10) * 4;
    expect(out.data[base]).toBe(input.data[(10 * W + 9) * 4]);
  });

  it('clamps samples beyond the edge to the edge texel', () => {
    const input = rampFrame();
    const out = applyRgbShift(input, [
      [W * 2, 0],
      [0, 0],
      [0, 0],
    ]);
    for (let x = 0; x < W; x++) {
      expect(out.data[x * 4]).toBe(input.data[0]);
    }
  });
});

describe('bubbleDisplacement', () => {
  it('is exactly zero at zero gain', () => {
    for (const angle of [0, 0.5, 1.5, 3.0, -2.0]) {
      expect(bubbleDisplacement(angle, [1, 1], 0, 2.2)).toEqual([0, 0]);
    }
  });

  it('phase (-1, 0) displaces purely along x, never positive', () => {
    for (let i = 0; i < 64; i++) {
      const angle = -Math.PI + (2 * Math.PI * i) / 64;
      const [dx, dy] = bubbleDisplacement(angle, [-1, 0], 5, 0.3);
      expect(dy).toBe(0);
      expect(dx).toBeLessThanOrEqual(0);
    }
    const [dx] = bubbleDisplacement(Math.PI / 4, [-1, 0], 5, 0);
    expect(dx).toBeLessThan(0);
  });

  it('magnitude is bounded by the gain', () => {
    for (let i = 0; i < 32; i++) {
      const [dx, dy] = bubbleDisplacement(i * 0.2, [1, -1], 3, 1.1);
      expect(Math.abs(dx)).toBeLessThanOrEqual(3);
      expect(Math.abs(dy)).toBeLessThanOrEqual(3);
    }
  });
});

describe('applyBubbles', () => {
  const bubble = { centerX: 32, centerY: 24, radiusPx: 10 };

  it('zero gain leaves the frame untouched', () => {
    const input = rampFrame();
    const out = applyBubbles(input, [bubble], [1, 1], 0, 0.9);
    expect(out.data).toEqual(input.data);
  });

  it('positive gain changes pixels inside the disc only', () => {
    const input = rampFrame();
    const out = applyBubbles(input, [bubble], [1, 0.5], 6, 0.9);
    let changedInside = 0;
    for (let y = 0; y < H; y++) {
      for (let x = 0; x < W; x++) {
        const base = (y * W + x) * 4;
        const inside =
          (x - bubble.centerX) ** 2 + (y - bubble.centerY) ** 2 <= bubble.radiusPx ** 2;
        const changed =
          out.data[base] !== input.data[base] ||
          out.data[base + 1] !== input.data[base + 1] ||
          out.data[base + 2] !== input.data[base + 2];
        if (!inside) expect(changed).toBe(false);
        else if (changed) changedInside++;
      }
    }
    expect(changedInside).toBeGreaterThan(0);
  });

  it('displaced texels sample where the reference math says', () => {
    const input = rampFrame();
    const out = applyBubbles(input, [bubble], [1, 0], 4, 0.25);
    const x = 36;
    const y = 24;
    const angle = Math.atan2(y - bubble.centerY, x - bubble.centerX);
    const [mx, my] = bubbleDisplacement(angle, [1, 0], 4, 0.25);
    const base = (y * W + x) * 4;
    expect(out.data[base]).toBe(sampleChannel(input, x - mx, y - my, 0));
    expect(out.data[base + 1]).toBe(sampleChannel(input, x - mx, y - my, 1));
  });
});

describe('displacementGain', () => {
  it('scales with loss and saturates at the engine gain', () => {
    expect(displacementGain(40, 0)).toBe(0);
    expect(displacementGain(40, 0.5)).toBe(20);
    expect(displacementGain(40, 7)).toBe(40);
    expect(displacementGain(40, -0.25)).toBe(10);
  });
});
