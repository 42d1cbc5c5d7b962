export {
  SchemaError,
  parseLandscape,
  parseCloud,
  parseOvrCurves,
  parsePredictions,
} from "./csv.js";
export type {
  LandscapeTable,
  LandscapeRow,
  CloudTable,
  CloudPoint,
  OvrCurves,
  PredictionsTable,
} from "./csv.js";
export { renderHeatmap, bestRowIndex } from "./heatmap.js";
export type { HeatmapOptions } from "./heatmap.js";
export { renderClouds } from "./clouds.js";
export type { CloudsOptions } from "./clouds.js";
export { renderRegions, assignClass } from "./regions.js";
export type { RegionsOptions } from "./regions.js";
export { runCli } from "./cli.js";
