/**
 * Per-class panels of (FPR, TPR) operating points, with the classical
 * one-vs-rest curve overlaid in orange when supplied.
 */

import { CloudTable, OvrCurves } from "./csv.js";
import { polylinePoints, svgDocument, tag, text } from "./svg.js";

export interface CloudsOptions {
  markerSize?: number;
  width?: number;
  ovr?: OvrCurves;
}

const PANEL = 230;
const GAP = 46;
const PAD = 40;

function panelOrigin(index: number, columns: number): [number, number] {
  const col = index % columns;
  const row = Math.floor(index / columns);
  return [PAD + col * (PANEL + GAP), PAD + 20 + row * (PANEL + GAP)];
}

export function renderClouds(cloud: CloudTable, options: CloudsOptions = {}): string {
  const m = cloud.m;
  const columns = Math.ceil(Math.sqrt(m));
  const rows = Math.ceil(m / columns);
  const radius = options.markerSize ?? 2.2;
  const width = options.width ?? PAD * 2 + columns * PANEL + (columns - 1) * GAP;
  const height = PAD * 2 + 20 + rows * PANEL + (rows - 1) * GAP;

  const children: string[] = [];
  for (let j = 0; j < m; j++) {
    const [ox, oy] = panelOrigin(j, columns);
    const px = (fpr: number) => ox + fpr * PANEL;
    const py = (tpr: number) => oy + (1 - tpr) * PANEL;

    children.push(
      tag("rect", {
        x: ox,
        y: oy,
        width: PANEL,
        height: PANEL,
        fill: "none",
        stroke: "#444444",
      }),
      tag("line", {
        x1: px(0),
        y1: py(0),
        x2: px(1),
        y2: py(1),
        stroke: "#999999",
        "stroke-dasharray": "4 3",
        class: "diagonal",
      }),
      text(`class ${j}`, { x: ox + 4, y: oy - 6, "font-size": 13 }),
      text("FPR", { x: ox + PANEL / 2 - 12, y: oy + PANEL + 26, "font-size": 11 }),
      text("TPR", {
        x: ox - 26,
        y: oy + PANEL / 2,
        "font-size": 11,
        transform: `rotate(-90 ${ox - 26} ${oy + PANEL / 2})`,
      }),
      text("0", { x: ox - 10, y: oy + PANEL + 12, "font-size": 10 }),
      text("1", { x: ox + PANEL - 4, y: oy + PANEL + 12, "font-size": 10 }),
      text("1", { x: ox - 12, y: oy + 8, "font-size": 10 }),
    );

    const dots = cloud.points
      .filter((p) => p.cls === j)
      .map((p) =>
        tag("circle", {
          cx: px(p.fpr).toFixed(2),
          cy: py(p.tpr).toFixed(2),
          r: radius,
          fill: "#1f77b4",
          "fill-opacity": 0.35,
          class: "cloud-point",
        }),
      );
    children.push(tag("g", { class: `cloud-class-${j}` }, dots));

    const curve = options.ovr?.get(j);
    if (curve && curve.length >= 2) {
      children.push(
        tag("polyline", {
          points: polylinePoints(curve.map((v) => [px(v.fpr), py(v.tpr)])),
          fill: "none",
          stroke: "#ff7f0e",
          "stroke-width": 1.8,
          class: `ovr-curve-${j}`,
        }),
      );
    }
  }

  return svgDocument(width, height, children);
}
