#!/usr/bin/env node
/**
 * Render pipeline CSV exports to SVG.
 *
 *   plot heatmap --in landscape.csv --out heatmap.svg [--column macro|0..]
 *   plot clouds  --in cloud.csv --out clouds.svg [--ovr ovr_curves.csv]
 *   plot regions --tau "0.2,0.5,0.3" --out regions.svg [--points preds.csv]
 *
 * Shared options: --marker-size N, --colormap viridis|grey, --width N,
 * --resolution N (regions only).
 *
 * Exit codes: 0 ok, 1 usage, 2 I/O, 3 schema/validation.
 */

import * as fs from "node:fs";

import { ColormapName } from "./color.js";
import { parseCloud, parseLandscape, parseOvrCurves, parsePredictions, SchemaError } from "./csv.js";
import { renderClouds } from "./clouds.js";
import { renderHeatmap } from "./heatmap.js";
import { renderRegions } from "./regions.js";

export class UsageError extends Error {}

interface Args {
  kind: string;
  flags: Map<string, string>;
}

const KNOWN_FLAGS = new Set([
  "--in",
  "--out",
  "--ovr",
  "--tau",
  "--points",
  "--marker-size",
  "--colormap",
  "--width",
  "--resolution",
  "--column",
]);

function parseArgs(argv: string[]): Args {
  if (argv.length === 0) {
    throw new UsageError("missing plot kind (heatmap | clouds | regions)");
  }
  const [kind, ...rest] = argv;
  const flags = new Map<string, string>();
  for (let i = 0; i < rest.length; i += 2) {
    const flag = rest[i];
    if (!KNOWN_FLAGS.has(flag)) {
      throw new UsageError(`unknown flag ${flag}`);
    }
    if (i + 1 >= rest.length) {
      throw new UsageError(`flag ${flag} needs a value`);
    }
    flags.set(flag, rest[i + 1]);
  }
  return { kind, flags };
}

function required(args: Args, flag: string): string {
  const value = args.flags.get(flag);
  if (value === undefined) {
    throw new UsageError(`${args.kind} requires ${flag}`);
  }
  return value;
}

function numberFlag(args: Args, flag: string): number | undefined {
  const raw = args.flags.get(flag);
  if (raw === undefined) {
    return undefined;
  }
  const value = Number(raw);
  if (!Number.isFinite(value) || value <= 0) {
    throw new UsageError(`${flag} must be a positive number, got ${raw}`);
  }
  return value;
}

function colormapFlag(args: Args): ColormapName | undefined {
  const raw = args.flags.get("--colormap");
  if (raw === undefined) {
    return undefined;
  }
  if (raw !== "viridis" && raw !== "grey") {
    throw new UsageError(`--colormap must be viridis or grey, got ${raw}`);
  }
  return raw;
}

function readFile(path: string): string {
  return fs.readFileSync(path, "utf-8");
}

function render(args: Args): string {
  if (args.kind === "heatmap") {
    const table = parseLandscape(readFile(required(args, "--in")), required(args, "--in"));
    const rawColumn = args.flags.get("--column") ?? "macro";
    const column = rawColumn === "macro" ? ("macro" as const) : Number(rawColumn);
    if (column !== "macro" && !Number.isInteger(column)) {
      throw new UsageError(`--column must be "macro" or a class index, got ${rawColumn}`);
    }
    return renderHeatmap(table, {
      markerSize: numberFlag(args, "--marker-size"),
      width: numberFlag(args, "--width"),
      colormap: colormapFlag(args),
      column,
    });
  }
  if (args.kind === "clouds") {
    const inPath = required(args, "--in");
    const cloud = parseCloud(readFile(inPath), inPath);
    const ovrPath = args.flags.get("--ovr");
    return renderClouds(cloud, {
      markerSize: numberFlag(args, "--marker-size"),
      width: numberFlag(args, "--width"),
      ovr: ovrPath ? parseOvrCurves(readFile(ovrPath), ovrPath) : undefined,
    });
  }
  if (args.kind === "regions") {
    const tau = required(args, "--tau")
      .split(",")
      .map((v) => {
        const x = Number(v);
        if (v.trim() === "" || !Number.isFinite(x)) {
          throw new UsageError(`--tau is not a comma-separated number list`);
        }
        return x;
      });
    const pointsPath = args.flags.get("--points");
    return renderRegions(tau, {
      resolution: numberFlag(args, "--resolution"),
      width: numberFlag(args, "--width"),
      markerSize: numberFlag(args, "--marker-size"),
      points: pointsPath ? parsePredictions(readFile(pointsPath), pointsPath) : undefined,
    });
  }
  throw new UsageError(`unknown plot kind ${args.kind}`);
}

export function runCli(argv: string[]): number {
  try {
    const args = parseArgs(argv);
    const svg = render(args);
    const outPath = required(args, "--out");
    fs.writeFileSync(outPath, svg, "utf-8");
    console.log(`wrote ${outPath}`);
    return 0;
  } catch (err) {
    if (err instanceof UsageError) {
      console.error(`error: usage: ${err.message}`);
      return 1;
    }
    if (err instanceof SchemaError) {
      console.error(`error: schema: ${err.message}`);
      return 3;
    }
    if (err instanceof Error && "code" in err) {
      console.error(`error: io: ${err.message}`);
      return 2;
    }
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 3;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${process.argv[1]}`).href;

if (invokedDirectly) {
  process.exit(runCli(process.argv.slice(2)));
}
