/** Minimal string-based SVG construction, enough for static plots. */

export type Attrs = Record<string, string | number>;

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function tag(name: string, attrs: Attrs = {}, children: string[] | string = []): string {
  const attrText = Object.entries(attrs)
    .map(([k, v]) => ` ${k}="${esc(String(v))}"`)
    .join("");
  const body = typeof children === "string" ? children : children.join("");
  return body === "" ? `<${name}${attrText}/>` : `<${name}${attrText}>${body}</${name}>`;
}

export function text(content: string, attrs: Attrs = {}): string {
  return tag("text", { "font-family": "sans-serif", ...attrs }, esc(content));
}

export function svgDocument(width: number, height: number, children: string[]): string {
  return [
    `<?xml version="1.0" encoding="UTF-8"?>`,
    tag(
      "svg",
      {
        xmlns: "http://www.w3.org/2000/svg",
        width,
        height,
        viewBox: `0 0 ${width} ${height}`,
      },
      [tag("rect", { x: 0, y: 0, width, height, fill: "white" }), ...children],
    ),
  ].join("\n");
}

/** Path data for a five-pointed star centered at (cx, cy). */
export function starPath(cx: number, cy: number, outer: number): string {
  const inner = outer * 0.4;
  const parts: string[] = [];
  for (let i = 0; i < 10; i++) {
    const r = i % 2 === 0 ? outer : inner;
    const angle = -Math.PI / 2 + (i * Math.PI) / 5;
    const x = cx + r * Math.cos(angle);
    const y = cy + r * Math.sin(angle);
    parts.push(`${i === 0 ? "M" : "L"}${x.toFixed(2)},${y.toFixed(2)}`);
  }
  return parts.join("") + "Z";
}

export function polylinePoints(coords: [number, number][]): string {
  return coords.map(([x, y]) => `${x.toFixed(2)},${y.toFixed(2)}`).join(" ");
}
