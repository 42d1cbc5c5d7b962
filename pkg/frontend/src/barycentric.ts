/**
 * Planar embedding of the 3-class simplex as an equilateral triangle.
 *
 * Component 0 maps to the bottom-left corner, component 1 to the
 * bottom-right, component 2 to the top.
 */

export const TRIANGLE_HEIGHT = Math.sqrt(3) / 2;

export function toPlane(t: number[]): [number, number] {
  if (t.length !== 3) {
    throw new Error(`barycentric projection needs 3 components, got ${t.length}`);
  }
  return [t[1] + 0.5 * t[2], t[2] * TRIANGLE_HEIGHT];
}

export interface TriangleFrame {
  originX: number;
  originY: number;
  side: number;
}

/** Map a simplex point into SVG pixels (y axis flipped). */
export function toPixels(t: number[], frame: TriangleFrame): [number, number] {
  const [x, y] = toPlane(t);
  return [frame.originX + x * frame.side, frame.originY - y * frame.side];
}

export function triangleCorners(frame: TriangleFrame): [number, number][] {
  return [
    toPixels([1, 0, 0], frame),
    toPixels([0, 1, 0], frame),
    toPixels([0, 0, 1], frame),
  ];
}
