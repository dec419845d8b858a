/**
 * Server-side SVG rendering of figure options and the file-to-file job.
 */

import { readFileSync, writeFileSync } from "node:fs";

import * as echarts from "echarts";
import type { EChartsOption } from "echarts";

import { buildOption } from "./figures.js";
import { FigureKind, parseCsv } from "./schemas.js";

export const WIDTH = 860;
export const HEIGHT = 560;

/** Render a chart option to a standalone SVG string. */
export function renderSvg(option: EChartsOption, width = WIDTH, height = HEIGHT): string {
  const chart = echarts.init(null, null, { renderer: "svg", ssr: true, width, height });
  try {
    chart.setOption(option);
    return chart.renderToSVGString();
  } finally {
    chart.dispose();
  }
}

/**
 * Render one figure: read the CSV, validate it against the kind's schema,
 * and write the SVG. Nothing is written when validation fails.
 */
export function renderFigure(kind: FigureKind, csvPath: string, outPath: string): void {
  const rows = parseCsv(readFileSync(csvPath, "utf8"));
  const svg = renderSvg(buildOption(kind, rows));
  writeFileSync(outPath, svg);
}
