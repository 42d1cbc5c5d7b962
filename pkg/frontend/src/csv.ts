/**
 * Parsers for the CSV files the tuning/ROC pipeline exports.
 *
 * Every parser validates the header against the documented schema and
 * raises SchemaError with a line reference on any malformed cell, so a
 * plot never silently renders garbage.
 */

import Papa from "papaparse";

export class SchemaError extends Error {}

export interface LandscapeRow {
  t: number[];
  macro: number;
  perClass: number[];
}

export interface LandscapeTable {
  m: number;
  rows: LandscapeRow[];
}

export interface CloudPoint {
  cls: number;
  k: number;
  t: number[];
  fpr: number;
  tpr: number;
}

export interface CloudTable {
  m: number;
  numThresholds: number;
  points: CloudPoint[];
}

export type OvrCurves = Map<number, { fpr: number; tpr: number }[]>;

export interface PredictionRow {
  p: number[];
  label: number;
}

export interface PredictionsTable {
  m: number;
  rows: PredictionRow[];
}

function cells(text: string, path: string): string[][] {
  const parsed = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new SchemaError(`${path}: CSV parse error at row ${e.row}: ${e.message}`);
  }
  const rows = parsed.data;
  if (rows.length === 0) {
    throw new SchemaError(`${path}: empty file`);
  }
  if (rows.length === 1) {
    throw new SchemaError(`${path}: no data rows`);
  }
  return rows;
}

function num(value: string, path: string, line: number): number {
  const x = Number(value);
  if (value.trim() === "" || !Number.isFinite(x)) {
    throw new SchemaError(`${path}: non-numeric value ${JSON.stringify(value)} on line ${line}`);
  }
  return x;
}

function int(value: string, path: string, line: number): number {
  const x = num(value, path, line);
  if (!Number.isInteger(x)) {
    throw new SchemaError(`${path}: expected integer, got ${value} on line ${line}`);
  }
  return x;
}

function expectHeader(got: string[], want: string[], path: string): void {
  if (got.length !== want.length || want.some((w, i) => got[i].trim() !== w)) {
    throw new SchemaError(
      `${path}: expected header ${want.join(",")}, got ${got.join(",")}`,
    );
  }
}

function thresholdColumns(m: number): string[] {
  return Array.from({ length: m }, (_, j) => `t${j}`);
}

/** landscape.csv: t0..t{m-1},macro,s0..s{m-1} */
export function parseLandscape(text: string, path = "landscape"): LandscapeTable {
  const rows = cells(text, path);
  const header = rows[0];
  if (header.length < 5 || header.length % 2 === 0) {
    throw new SchemaError(`${path}: header ${header.join(",")} does not match t0..,macro,s0..`);
  }
  const m = (header.length - 1) / 2;
  expectHeader(
    header,
    [...thresholdColumns(m), "macro", ...Array.from({ length: m }, (_, j) => `s${j}`)],
    path,
  );
  const out: LandscapeRow[] = [];
  for (let i = 1; i < rows.length; i++) {
    const line = i + 1;
    const r = rows[i];
    if (r.length !== header.length) {
      throw new SchemaError(`${path}: expected ${header.length} fields on line ${line}, got ${r.length}`);
    }
    out.push({
      t: r.slice(0, m).map((v) => num(v, path, line)),
      macro: num(r[m], path, line),
      perClass: r.slice(m + 1).map((v) => num(v, path, line)),
    });
  }
  return { m, rows: out };
}

/** cloud.csv: class,k,t0..t{m-1},fpr,tpr */
export function parseCloud(text: string, path = "cloud"): CloudTable {
  const rows = cells(text, path);
  const header = rows[0];
  if (header.length < 6) {
    throw new SchemaError(`${path}: header ${header.join(",")} does not match class,k,t0..,fpr,tpr`);
  }
  const m = header.length - 4;
  expectHeader(header, ["class", "k", ...thresholdColumns(m), "fpr", "tpr"], path);
  const points: CloudPoint[] = [];
  let numThresholds = 0;
  let maxClass = -1;
  for (let i = 1; i < rows.length; i++) {
    const line = i + 1;
    const r = rows[i];
    if (r.length !== header.length) {
      throw new SchemaError(`${path}: expected ${header.length} fields on line ${line}, got ${r.length}`);
    }
    const point: CloudPoint = {
      cls: int(r[0], path, line),
      k: int(r[1], path, line),
      t: r.slice(2, 2 + m).map((v) => num(v, path, line)),
      fpr: num(r[2 + m], path, line),
      tpr: num(r[3 + m], path, line),
    };
    if (point.cls < 0 || point.cls >= m) {
      throw new SchemaError(`${path}: class ${point.cls} out of range on line ${line}`);
    }
    numThresholds = Math.max(numThresholds, point.k + 1);
    maxClass = Math.max(maxClass, point.cls);
    points.push(point);
  }
  return { m, numThresholds, points };
}

/** ovr_curves.csv: class,fpr,tpr (vertices in sweep order per class) */
export function parseOvrCurves(text: string, path = "ovr_curves"): OvrCurves {
  const rows = cells(text, path);
  expectHeader(rows[0], ["class", "fpr", "tpr"], path);
  const curves: OvrCurves = new Map();
  for (let i = 1; i < rows.length; i++) {
    const line = i + 1;
    const r = rows[i];
    if (r.length !== 3) {
      throw new SchemaError(`${path}: expected 3 fields on line ${line}, got ${r.length}`);
    }
    const cls = int(r[0], path, line);
    const vertex = { fpr: num(r[1], path, line), tpr: num(r[2], path, line) };
    const existing = curves.get(cls);
    if (existing) {
      existing.push(vertex);
    } else {
      curves.set(cls, [vertex]);
    }
  }
  return curves;
}

/** predictions.csv: p0..p{m-1},label */
export function parsePredictions(text: string, path = "predictions"): PredictionsTable {
  const rows = cells(text, path);
  const header = rows[0];
  const m = header.length - 1;
  if (m < 2) {
    throw new SchemaError(`${path}: header ${header.join(",")} does not match p0..,label`);
  }
  expectHeader(header, [...Array.from({ length: m }, (_, j) => `p${j}`), "label"], path);
  const out: PredictionRow[] = [];
  for (let i = 1; i < rows.length; i++) {
    const line = i + 1;
    const r = rows[i];
    if (r.length !== m + 1) {
      throw new SchemaError(`${path}: expected ${m + 1} fields on line ${line}, got ${r.length}`);
    }
    const label = int(r[m], path, line);
    if (label < 0 || label >= m) {
      throw new SchemaError(`${path}: label ${label} out of range on line ${line}`);
    }
    out.push({ p: r.slice(0, m).map((v) => num(v, path, line)), label });
  }
  return { m, rows: out };
}
