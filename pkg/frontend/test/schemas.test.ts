import { describe, expect, it } from "vitest";

import { SchemaError, distinct, num, parseCsv, validateRows } from "../src/schemas.js";

describe("parseCsv", () => {
  it("parses header-keyed rows", () => {
    const rows = parseCsv("channel,p_mu\n0,1.5\n1,2.5\n");
    expect(rows).toEqual([
      { channel: "0", p_mu: "1.5" },
      { channel: "1", p_mu: "2.5" },
    ]);
  });

  it("handles quoted fields containing commas", () => {
    const rows = parseCsv('M,pattern\n11,"2,3,6"\n');
    expect(rows[0].pattern).toBe("2,3,6");
  });
});

describe("validateRows", () => {
  it("accepts a matching schema", () => {
    const rows = parseCsv("channel,p_mu\n0,1\n");
    expect(validateRows("pseudospectrum", rows)).toHaveLength(1);
  });

  it("names the missing columns", () => {
    const rows = parseCsv("channel,value\n0,1\n");
    expect(() => validateRows("pseudospectrum", rows)).toThrowError(/p_mu/);
    expect(() => validateRows("pseudospectrum", rows)).toThrowError(/found.*channel/);
  });

  it("rejects an empty data section", () => {
    expect(() => validateRows("eigenvalues", parseCsv("index,eigenvalue_db\n"))).toThrowError(
      SchemaError,
    );
  });

  it("tolerates extra columns", () => {
    const rows = parseCsv("M,snr_db,trials,pr_order,pd,pf,pattern,seed\n11,1,5,0.5,0.9,0.01,x,1\n");
    expect(validateRows("pd_pf_vs_M", rows)).toHaveLength(1);
  });
});

describe("field helpers", () => {
  it("parses numeric fields", () => {
    expect(num({ a: "2.5e-3" }, "a")).toBeCloseTo(0.0025);
  });

  it("rejects non-numeric fields", () => {
    expect(() => num({ a: "oops" }, "a")).toThrowError(/non-numeric/);
  });

  it("keeps distinct values in first-appearance order", () => {
    const rows = parseCsv("snr\n1\n-2\n1\n3\n");
    expect(distinct(rows, "snr")).toEqual(["1", "-2", "3"]);
  });
});
