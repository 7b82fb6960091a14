import { describe, expect, it } from 'vitest';

import {
  cubicValue,
  knotOutline,
  lissajousPoint,
  project,
  rotateX,
  rotateY,
  sampleCubic,
  sampleKnot,
  splitKnotTarget,
} from '../src/curves.js';

describe('cubicValue', () => {
  it('matches the monomial form on a sweep', () => {
    const theta = [1.5, -0.25, 2.0, -1.0];
    for (let i = 0; i <= 40; i++) {
      const x = -1 + i / 20;
      const direct = 1.5 * x ** 3 - 0.25 * x ** 2 + 2.0 * x - 1.0;
      expect(cubicValue(theta, x)).toBeCloseTo(direct, 12);
    }
  });

  it('is exact at simple points', () => {
    expect(cubicValue([0, 0, 0, 4], 0.7)).toBe(4);
    expect(cubicValue([1, 0, 0, 0], 2)).toBe(8);
    expect(cubicValue([1, 1, 1, 1], 1)).toBe(4);
  });
});

describe('lissajousPoint', () => {
  it('is componentwise cos(n t + phase)', () => {
    const point = lissajousPoint([2, 3, 5], [0.1, 0.2, 0.3], 0.75);
    expect(point[0]).toBe(Math.cos(2 * 0.75 + 0.1));
    expect(point[1]).toBe(Math.cos(3 * 0.75 + 0.2));
    expect(point[2]).toBe(Math.cos(5 * 0.75 + 0.3));
  });
});

describe('sampling', () => {
  it('cubic samples span [-1, 1] inclusive', () => {
    const points = sampleCubic([0, 0, 1, 0], 65);
    expect(points).toHaveLength(65);
    expect(points[0][0]).toBe(-1);
    expect(points[64][0]).toBe(1);
    expect(points[32][0]).toBeCloseTo(0, 12);
  });

  it('knot samples close the loop when multipliers are integers', () => {
    const points = sampleKnot([3, 4, 7], [0.5, 1.0, 1.5], 257);
    const [first, last] = [points[0], points[256]];
    for (let axis = 0; axis < 3; axis++) {
      expect(last[axis]).toBeCloseTo(first[axis], 9);
    }
  });
});

describe('rotation and projection', () => {
  it('rotations preserve vector length', () => {
    const v: [number, number, number] = [0.3, -0.7, 0.5];
    const norm = (p: number[]) => Math.hypot(p[0], p[1], p[2]);
    expect(norm(rotateY(v, 1.2))).toBeCloseTo(norm(v), 12);
    expect(norm(rotateX(v, -2.1))).toBeCloseTo(norm(v), 12);
  });

  it('quarter turn around Y maps +x to -z', () => {
    const [x, y, z] = rotateY([1, 0, 0], Math.PI / 2);
    expect(x).toBeCloseTo(0, 12);
    expect(y).toBe(0);
    expect(z).toBeCloseTo(-1, 12);
  });

  it('projection is identity on the z=0 plane and shrinks far points', () => {
    expect(project([0.4, -0.2, 0])).toEqual([0.4, -0.2]);
    const near = project([1, 1, 1], 3);
    const far = project([1, 1, -1], 3);
    expect(near[0]).toBeGreaterThan(far[0]);
  });

  it('knot outline stays in a bounded box', () => {
    // Knot points lie in the sqrt(3) ball; with the camera at 3 the
    // projected coordinate max x * 3 / (3 - z) on that ball is ~2.12.
    const outline = knotOutline([3, 4, 7], [0.1, 0.2, 0.3], 256, 12345);
    for (const [x, y] of outline) {
      expect(Math.abs(x)).toBeLessThan(2.13);
      expect(Math.abs(y)).toBeLessThan(2.13);
    }
  });
});

describe('splitKnotTarget', () => {
  it('splits the 6-vector into multipliers and phases', () => {
    expect(splitKnotTarget([2, 3, 5, 0.1, 0.2, 0.3])).toEqual({
      multipliers: [2, 3, 5],
      phases: [0.1, 0.2, 0.3],
    });
  });
});
