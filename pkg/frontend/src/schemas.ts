/**
 * CSV schemas for each figure kind.
 *
 * Every figure reads exactly one documented CSV produced by the mcsense CLI;
 * validation reports the missing columns by name so a schema mismatch is
 * diagnosable from the error alone.
 */

import Papa from "papaparse";

export const FIGURE_KINDS = [
  "spectrum",
  "eigenvalues",
  "pseudospectrum",
  "pr_order_vs_M",
  "pd_pf_vs_M",
] as const;

export type FigureKind = (typeof FIGURE_KINDS)[number];

export const REQUIRED_COLUMNS: Record<FigureKind, string[]> = {
  spectrum: ["frequency", "psd_db"],
  eigenvalues: ["index", "eigenvalue_db"],
  pseudospectrum: ["channel", "p_mu"],
  pr_order_vs_M: ["M", "snr_db", "pr_order"],
  pd_pf_vs_M: ["M", "snr_db", "pd", "pf"],
};

/** One CSV record: raw string fields keyed by header name. */
export type CsvRow = Record<string, string>;

export class SchemaError extends Error {}

export function isFigureKind(value: string): value is FigureKind {
  return (FIGURE_KINDS as readonly string[]).includes(value);
}

/** Parse CSV text into header-keyed rows (quoted fields handled). */
export function parseCsv(text: string): CsvRow[] {
  const result = Papa.parse<CsvRow>(text.trim(), {
    header: true,
    skipEmptyLines: true,
    delimiter: ",",
  });
  const fatal = result.errors.filter((e) => e.code !== "TooFewFields");
  if (fatal.length > 0) {
    throw new SchemaError(`CSV parse failed: ${fatal[0].message}`);
  }
  return result.data;
}

/**
 * Check a parsed CSV against a figure kind's schema and return its rows.
 * Rejects missing columns (named in the error) and empty data sections.
 */
export function validateRows(kind: FigureKind, rows: CsvRow[]): CsvRow[] {
  if (rows.length === 0) {
    throw new SchemaError(`no data rows for figure kind '${kind}'`);
  }
  const found = Object.keys(rows[0]);
  const missing = REQUIRED_COLUMNS[kind].filter((c) => !found.includes(c));
  if (missing.length > 0) {
    throw new SchemaError(
      `figure kind '${kind}' needs columns [${missing.join(", ")}] ` +
        `missing from CSV (found: [${found.join(", ")}])`,
    );
  }
  return rows;
}

/** Numeric field access; NaN values are schema violations, not data. */
export function num(row: CsvRow, column: string): number {
  const value = Number(row[column]);
  if (!Number.isFinite(value)) {
    throw new SchemaError(`column '${column}' holds non-numeric value '${row[column]}'`);
  }
  return value;
}

/** Distinct values of a column in first-appearance order. */
export function distinct(rows: CsvRow[], column: string): string[] {
  const seen: string[] = [];
  for (const row of rows) {
    if (!seen.includes(row[column])) seen.push(row[column]);
  }
  return seen;
}
