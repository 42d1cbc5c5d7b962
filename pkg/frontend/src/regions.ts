/**
 * Decision-region diagram for one threshold on the 3-class simplex.
 *
 * A dense barycentric lattice is classified with the thresholded rule
 * (argmax of z - tau, smallest index on ties) and colored by the decision;
 * labeled sample points can be overlaid to show where the data falls.
 */

import { toPixels, triangleCorners, TriangleFrame } from "./barycentric.js";
import { classColor } from "./color.js";
import { PredictionsTable, SchemaError } from "./csv.js";
import { polylinePoints, svgDocument, tag, text } from "./svg.js";

export interface RegionsOptions {
  /** Lattice steps per edge used to rasterize the regions. */
  resolution?: number;
  width?: number;
  markerSize?: number;
  points?: PredictionsTable;
}

export function assignClass(z: number[], tau: number[]): number {
  let best = 0;
  let bestDiff = z[0] - tau[0];
  for (let j = 1; j < z.length; j++) {
    const d = z[j] - tau[j];
    if (d > bestDiff) {
      best = j;
      bestDiff = d;
    }
  }
  return best;
}

export function validateTau(tau: number[]): void {
  if (tau.length !== 3) {
    throw new SchemaError(`region diagram requires 3 components, got ${tau.length}`);
  }
  if (tau.some((c) => !(c >= 0))) {
    throw new SchemaError(`threshold has a negative component: ${tau.join(",")}`);
  }
  const sum = tau.reduce((a, b) => a + b, 0);
  if (Math.abs(sum - 1) > 1e-6) {
    throw new SchemaError(`threshold components sum to ${sum}, not 1`);
  }
}

export function renderRegions(tau: number[], options: RegionsOptions = {}): string {
  validateTau(tau);
  if (options.points && options.points.m !== 3) {
    throw new SchemaError(`overlay predictions must have 3 classes, got ${options.points.m}`);
  }
  const width = options.width ?? 640;
  const margin = 60;
  const side = width - 2 * margin;
  const height = Math.round(side * (Math.sqrt(3) / 2)) + 2 * margin;
  const frame: TriangleFrame = { originX: margin, originY: height - margin, side };

  const resolution = options.resolution ?? 110;
  const pitchRadius = Math.max(1.0, (0.62 * side) / resolution);
  const cells: string[] = [];
  for (let i = 0; i <= resolution; i++) {
    for (let j = 0; j <= resolution - i; j++) {
      const z = [i / resolution, j / resolution, (resolution - i - j) / resolution];
      const cls = assignClass(z, tau);
      const [x, y] = toPixels(z, frame);
      cells.push(
        tag("circle", {
          cx: x.toFixed(2),
          cy: y.toFixed(2),
          r: pitchRadius.toFixed(2),
          fill: classColor(cls),
          "fill-opacity": 0.28,
          class: `region-${cls}`,
        }),
      );
    }
  }

  const corners = triangleCorners(frame);
  const outline = tag("polygon", {
    points: polylinePoints(corners),
    fill: "none",
    stroke: "#444444",
    "stroke-width": 1,
  });

  const overlay: string[] = [];
  if (options.points) {
    const r = options.markerSize ?? 3.2;
    for (const row of options.points.rows) {
      const [x, y] = toPixels(row.p, frame);
      overlay.push(
        tag("circle", {
          cx: x.toFixed(2),
          cy: y.toFixed(2),
          r,
          fill: classColor(row.label),
          stroke: "#222222",
          "stroke-width": 0.6,
          class: `sample-label-${row.label}`,
        }),
      );
    }
  }

  const [tx, ty] = toPixels(tau, frame);
  const tauMarker = tag("circle", {
    cx: tx.toFixed(2),
    cy: ty.toFixed(2),
    r: 6,
    fill: "#000000",
    class: "marker-tau",
  });

  const legend = [0, 1, 2].flatMap((j) => [
    tag("rect", {
      x: width - 18,
      y: 40 + j * 20,
      width: 12,
      height: 12,
      fill: classColor(j),
      "fill-opacity": 0.6,
    }),
    text(`region ${j}`, { x: width + 0, y: 50 + j * 20, "font-size": 11 }),
  ]);
  const title = text(`decision regions at tau = (${tau.join(", ")})`, {
    x: margin,
    y: 26,
    "font-size": 15,
  });

  return svgDocument(width + 70, height, [title, ...cells, outline, ...overlay, tauMarker, ...legend]);
}
