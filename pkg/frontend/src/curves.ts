/**
 * Curve evaluation and screen-space sampling.
 *
 * Cubics are drawn over x in [-1, 1]; knots over t in [0, 2pi] so the
 * closed curve visually closes. The knot is projected from 3D with a
 * slow auto-rotation driven by the caller's clock.
 */

export type Vec3 = [number, number, number];

/** theta = (a, b, c, d) for a x^3 + b x^2 + c x + d, evaluated by Horner. */
export function cubicValue(theta: number[], x: number): number {
  return ((theta[0] * x + theta[1]) * x + theta[2]) * x + theta[3];
}

/** One knot point: componentwise cos(n_i * t + phase_i). */
export function lissajousPoint(multipliers: number[], phases: number[], t: number): Vec3 {
  return [
    Math.cos(multipliers[0] * t + phases[0]),
    Math.cos(multipliers[1] * t + phases[1]),
    Math.cos(multipliers[2] * t + phases[2]),
  ];
}

/** n samples of the cubic across [-1, 1] inclusive (n >= 2). */
export function sampleCubic(theta: number[], n: number): [number, number][] {
  const points: [number, number][] = [];
  for (let i = 0; i < n; i++) {
    const x = -1 + (2 * i) / (n - 1);
    points.push([x, cubicValue(theta, x)]);
  }
  return points;
}

/** n samples of the knot across [0, 2pi] inclusive so it closes. */
export function sampleKnot(multipliers: number[], phases: number[], n: number): Vec3[] {
  const points: Vec3[] = [];
  for (let i = 0; i < n; i++) {
    const t = (2 * Math.PI * i) / (n - 1);
    points.push(lissajousPoint(multipliers, phases, t));
  }
  return points;
}

export function rotateY([x, y, z]: Vec3, angle: number): Vec3 {
  const c = Math.cos(angle);
  const s = Math.sin(angle);
  return [c * x + s * z, y, -s * x + c * z];
}

export function rotateX([x, y, z]: Vec3, angle: number): Vec3 {
  const c = Math.cos(angle);
  const s = Math.sin(angle);
  return [x, c * y - s * z, s * y + c * z];
}

/**
 * Perspective projection onto the z = 0 plane with the camera on the
 * +z axis at `cameraDistance`. Points stay inside roughly [-1, 1]^2
 * for knot coordinates when the distance is > 2.
 */
export function project([x, y, z]: Vec3, cameraDistance = 3): [number, number] {
  const w = cameraDistance / (cameraDistance - z);
  return [x * w, y * w];
}

/**
 * Knot samples rotated by the animation clock and projected to 2D.
 * Rotation speed is aesthetic: one full turn roughly every 24 s
 * around Y with a slower X tumble.
 */
export function knotOutline(
  multipliers: number[],
  phases: number[],
  n: number,
  clockMs: number,
): [number, number][] {
  const yAngle = (2 * Math.PI * clockMs) / 24000;
  const xAngle = (2 * Math.PI * clockMs) / 61000;
  return sampleKnot(multipliers, phases, n).map((p) =>
    project(rotateX(rotateY(p, yAngle), xAngle)),
  );
}

/**
 * Split a snapshot's lissajous target vector (nx, ny, nz, pa, pb, pc)
 * into multipliers and phases.
 */
export function splitKnotTarget(target: number[]): { multipliers: number[]; phases: number[] } {
  return { multipliers: target.slice(0, 3), phases: target.slice(3, 6) };
}
