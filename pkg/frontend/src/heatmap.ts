/**
 * Score heatmap across the 3-class simplex.
 *
 * Every landscape row becomes a colored dot at its barycentric position.
 * The plain-argmax threshold (the simplex center) is marked with a red
 * circle and the best-scoring threshold with a green star, matching the
 * tie rule of the tuner (highest score, then closest to the center, then
 * lexicographically smallest).
 */

import { toPixels, triangleCorners, TriangleFrame } from "./barycentric.js";
import { colormap, ColormapName } from "./color.js";
import { LandscapeTable, SchemaError } from "./csv.js";
import { polylinePoints, starPath, svgDocument, tag, text } from "./svg.js";

export interface HeatmapOptions {
  /** Dot radius in pixels; derived from the grid pitch when omitted. */
  markerSize?: number;
  colormap?: ColormapName;
  width?: number;
  /** Which score to color by: the macro average or one class index. */
  column?: "macro" | number;
}

function rowValue(row: { macro: number; perClass: number[] }, column: "macro" | number): number {
  if (column === "macro") {
    return row.macro;
  }
  if (column < 0 || column >= row.perClass.length) {
    throw new SchemaError(`score column s${column} out of range`);
  }
  return row.perClass[column];
}

export function bestRowIndex(table: LandscapeTable, column: "macro" | number = "macro"): number {
  const m = table.m;
  const values = table.rows.map((r) => rowValue(r, column));
  const best = Math.max(...values);
  let winner = -1;
  let winnerDist = Infinity;
  for (let i = 0; i < table.rows.length; i++) {
    if (values[i] !== best) {
      continue;
    }
    const dist = table.rows[i].t.reduce((acc, c) => acc + Math.abs(c - 1 / m), 0);
    if (
      winner === -1 ||
      dist < winnerDist ||
      (dist === winnerDist && lexLess(table.rows[i].t, table.rows[winner].t))
    ) {
      winner = i;
      winnerDist = dist;
    }
  }
  return winner;
}

function lexLess(a: number[], b: number[]): boolean {
  for (let i = 0; i < a.length; i++) {
    if (a[i] !== b[i]) {
      return a[i] < b[i];
    }
  }
  return false;
}

export function renderHeatmap(table: LandscapeTable, options: HeatmapOptions = {}): string {
  if (table.m !== 3) {
    throw new SchemaError(`heatmap requires 3 classes, landscape has ${table.m}`);
  }
  const column = options.column ?? "macro";
  const width = options.width ?? 640;
  const margin = 60;
  const side = width - 2 * margin;
  const height = Math.round(side * (Math.sqrt(3) / 2)) + 2 * margin;
  const frame: TriangleFrame = { originX: margin, originY: height - margin, side };
  const color = colormap(options.colormap ?? "viridis");

  const values = table.rows.map((r) => rowValue(r, column));
  const lo = Math.min(...values);
  const hi = Math.max(...values);
  const span = hi - lo;
  const normalize = (v: number) => (span > 0 ? (v - lo) / span : 0.5);

  // dot radius from the lattice pitch: a resolution-k grid has about
  // k^2/2 rows, so pitch ~ side/k
  const approxResolution = Math.sqrt(2 * table.rows.length);
  const radius = options.markerSize ?? Math.max(1.2, (0.75 * side) / approxResolution);

  const dots = table.rows.map((row, i) => {
    const [x, y] = toPixels(row.t, frame);
    return tag("circle", {
      cx: x.toFixed(2),
      cy: y.toFixed(2),
      r: radius.toFixed(2),
      fill: color(normalize(values[i])),
    });
  });

  const corners = triangleCorners(frame);
  const outline = tag("polygon", {
    points: polylinePoints([...corners]),
    fill: "none",
    stroke: "#444444",
    "stroke-width": 1,
  });
  const cornerLabels = [
    text("t0 = 1", { x: corners[0][0] - 14, y: corners[0][1] + 22, "font-size": 13 }),
    text("t1 = 1", { x: corners[1][0] - 14, y: corners[1][1] + 22, "font-size": 13 }),
    text("t2 = 1", { x: corners[2][0] - 14, y: corners[2][1] - 10, "font-size": 13 }),
  ];

  const [bx, by] = toPixels([1 / 3, 1 / 3, 1 / 3], frame);
  const baryMarker = tag("circle", {
    cx: bx.toFixed(2),
    cy: by.toFixed(2),
    r: (radius * 2.2).toFixed(2),
    fill: "none",
    stroke: "#d62728",
    "stroke-width": 2.5,
    class: "marker-barycenter",
  });
  const bestIdx = bestRowIndex(table, column);
  const [sx, sy] = toPixels(table.rows[bestIdx].t, frame);
  const bestMarker = tag("path", {
    d: starPath(sx, sy, radius * 3.2),
    fill: "#2ca02c",
    stroke: "#145214",
    "stroke-width": 1,
    class: "marker-best",
  });

  // vertical colorbar on the right
  const barX = width - margin + 18;
  const barTop = margin;
  const barH = height - 2 * margin;
  const steps = 24;
  const bar: string[] = [];
  for (let i = 0; i < steps; i++) {
    bar.push(
      tag("rect", {
        x: barX,
        y: barTop + ((steps - 1 - i) * barH) / steps,
        width: 14,
        height: barH / steps + 1,
        fill: color(i / (steps - 1)),
      }),
    );
  }
  bar.push(text(hi.toFixed(4), { x: barX - 4, y: barTop - 8, "font-size": 11 }));
  bar.push(text(lo.toFixed(4), { x: barX - 4, y: barTop + barH + 16, "font-size": 11 }));

  const title = text(
    `${column === "macro" ? "macro score" : `class ${column} score`} across thresholds`,
    { x: margin, y: 26, "font-size": 15 },
  );

  return svgDocument(width + 40, height, [
    title,
    ...dots,
    outline,
    ...cornerLabels,
    baryMarker,
    bestMarker,
    ...bar,
  ]);
}
