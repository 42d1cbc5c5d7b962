/** Colormaps for the score heatmap (sampled anchors, linear interpolation). */

export type ColormapName = "viridis" | "grey";

const VIRIDIS: [number, number, number][] = [
  [0x44, 0x01, 0x54],
  [0x47, 0x2d, 0x7b],
  [0x3b, 0x52, 0x8b],
  [0x2c, 0x72, 0x8e],
  [0x21, 0x91, 0x8c],
  [0x27, 0xad, 0x81],
  [0x5e, 0xc9, 0x62],
  [0xaa, 0xdc, 0x32],
  [0xfd, 0xe7, 0x25],
];

function hex2(v: number): string {
  return Math.round(v).toString(16).padStart(2, "0");
}

function interpolate(anchors: [number, number, number][], t: number): string {
  const clamped = Math.min(1, Math.max(0, t));
  const pos = clamped * (anchors.length - 1);
  const lo = Math.floor(pos);
  const hi = Math.min(anchors.length - 1, lo + 1);
  const frac = pos - lo;
  const rgb = anchors[lo].map((a, i) => a + frac * (anchors[hi][i] - a));
  return `#${hex2(rgb[0])}${hex2(rgb[1])}${hex2(rgb[2])}`;
}

export function colormap(name: ColormapName): (t: number) => string {
  if (name === "grey") {
    return (t) => interpolate([[40, 40, 40], [235, 235, 235]], t);
  }
  return (t) => interpolate(VIRIDIS, t);
}

/** Categorical colors for classes in region/overlay plots. */
export const CLASS_COLORS = [
  "#d62728",
  "#2ca02c",
  "#1f77b4",
  "#9467bd",
  "#8c564b",
  "#e377c2",
  "#7f7f7f",
  "#bcbd22",
  "#17becf",
  "#ff7f0e",
];

export function classColor(index: number): string {
  return CLASS_COLORS[index % CLASS_COLORS.length];
}
