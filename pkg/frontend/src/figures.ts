/**
 * Chart-option builders, one per figure kind.
 *
 * Each builder is a pure function from validated CSV rows to an echarts
 * option, so tests can inspect the plotted data without touching the SVG
 * renderer.
 */

import type { EChartsOption, SeriesOption } from "echarts";

import { CsvRow, FigureKind, distinct, num, validateRows } from "./schemas.js";

const PALETTE = ["#4165c4", "#c0392b", "#1e8449", "#b7950b", "#7d3c98", "#148f9e"];

function baseOption(title: string, xName: string, yName: string): EChartsOption {
  return {
    animation: false,
    title: { text: title, left: "center", textStyle: { fontSize: 14 } },
    grid: { left: 70, right: 30, top: 50, bottom: 55 },
    xAxis: { type: "value", name: xName, nameLocation: "middle", nameGap: 30 },
    yAxis: { type: "value", name: yName, nameLocation: "middle", nameGap: 50 },
  };
}

function spectrumOption(rows: CsvRow[]): EChartsOption {
  const points = rows.map((r) => [num(r, "frequency"), num(r, "psd_db")]);
  return {
    ...baseOption("Received power spectral density", "frequency [channel units]", "PSD [dB]"),
    series: [{ type: "line", showSymbol: false, data: points, lineStyle: { width: 1.2 } }],
  };
}

function eigenvaluesOption(rows: CsvRow[]): EChartsOption {
  const points = rows.map((r) => [num(r, "index"), num(r, "eigenvalue_db")]);
  return {
    ...baseOption("Ordered correlation-matrix eigenvalues", "index", "eigenvalue [dB]"),
    xAxis: { type: "value", name: "index", nameLocation: "middle", nameGap: 30, minInterval: 1 },
    series: [
      { type: "line", data: points, symbolSize: 9, lineStyle: { width: 1 } },
    ],
  };
}

function pseudospectrumOption(rows: CsvRow[]): EChartsOption {
  const channels = rows.map((r) => num(r, "channel"));
  const values = rows.map((r) => num(r, "p_mu"));
  const positive = values.filter((v) => v > 0);
  const spansDecades =
    positive.length > 0 && Math.max(...positive) / Math.min(...positive) > 1e3;
  return {
    ...baseOption("Channel pseudospectrum", "channel index", "pseudospectrum value"),
    xAxis: { type: "category", data: channels.map(String), name: "channel index", nameLocation: "middle", nameGap: 30 },
    yAxis: {
      type: spansDecades ? "log" : "value",
      name: "pseudospectrum value",
      nameLocation: "middle",
      nameGap: 55,
    },
    series: [{ type: "bar", data: values, barCategoryGap: "20%" }],
  };
}

function perSnrSeries(
  rows: CsvRow[],
  column: "pr_order" | "pd" | "pf",
  extra: Partial<SeriesOption> = {},
): SeriesOption[] {
  return distinct(rows, "snr_db").map((snr, i) => {
    const cells = rows.filter((r) => r.snr_db === snr);
    return {
      type: "line",
      name: `${column} @ ${snr} dB`,
      data: cells.map((r) => [num(r, "M"), num(r, column)]),
      symbolSize: 7,
      itemStyle: { color: PALETTE[i % PALETTE.length] },
      lineStyle: { color: PALETTE[i % PALETTE.length] },
      ...extra,
    } as SeriesOption;
  });
}

function prOrderOption(rows: CsvRow[]): EChartsOption {
  return {
    ...baseOption("Probability of detecting the occupied-channel count", "M [snapshots]", "Pr(count correct)"),
    legend: { bottom: 0 },
    grid: { left: 70, right: 30, top: 50, bottom: 80 },
    yAxis: { type: "value", name: "Pr(count correct)", nameLocation: "middle", nameGap: 50, min: 0, max: 1 },
    series: perSnrSeries(rows, "pr_order"),
  };
}

function pdPfOption(rows: CsvRow[]): EChartsOption {
  // Two stacked panels: detection probability on top, false alarms below,
  // one curve per SNR in each.
  const pdSeries = perSnrSeries(rows, "pd").map((s) => ({ ...s, xAxisIndex: 0, yAxisIndex: 0 }));
  const pfSeries = perSnrSeries(rows, "pf", { lineStyle: { type: "dashed" } }).map((s) => ({
    ...s,
    xAxisIndex: 1,
    yAxisIndex: 1,
  }));
  return {
    animation: false,
    title: { text: "Detection and false-alarm probability vs M", left: "center", textStyle: { fontSize: 14 } },
    legend: { bottom: 0 },
    grid: [
      { left: 70, right: 30, top: 50, height: "30%" },
      { left: 70, right: 30, top: "55%", height: "28%" },
    ],
    xAxis: [
      { type: "value", gridIndex: 0, name: "M", nameLocation: "middle", nameGap: 25 },
      { type: "value", gridIndex: 1, name: "M", nameLocation: "middle", nameGap: 25 },
    ],
    yAxis: [
      { type: "value", gridIndex: 0, name: "Pd", nameLocation: "middle", nameGap: 45, min: 0, max: 1 },
      { type: "value", gridIndex: 1, name: "Pf", nameLocation: "middle", nameGap: 45 },
    ],
    series: [...pdSeries, ...pfSeries],
  };
}

const BUILDERS: Record<FigureKind, (rows: CsvRow[]) => EChartsOption> = {
  spectrum: spectrumOption,
  eigenvalues: eigenvaluesOption,
  pseudospectrum: pseudospectrumOption,
  pr_order_vs_M: prOrderOption,
  pd_pf_vs_M: pdPfOption,
};

/** Build the chart option for a figure kind from validated CSV rows. */
export function buildOption(kind: FigureKind, rows: CsvRow[]): EChartsOption {
  return BUILDERS[kind](validateRows(kind, rows));
}
