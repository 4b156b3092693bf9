/**
 * Figure definitions over the photonbox CSV contract.
 *
 * Six kinds: normalized-energy curve (one cavity), shape family (several
 * cavities), the three merge-effect curves, and the face-pressure ratios.
 * The horizontal axis is always the reduced temperature t, log-scaled by
 * default with a guide at the characteristic scale t = 1.
 */

import * as fs from "fs";
import * as path from "path";

import { loadTable, SchemaError, Table } from "./csv";
import { FigureKind, TABLE_FOR_KIND } from "./schema";
import { ChartOptions, renderLineChart, Series } from "./svg";

export interface FigureSpec {
  kind: FigureKind;
  inputs: string[];
  output: string;
  linearX?: boolean;
}

function seriesLabel(file: string): string {
  return path.basename(file).replace(/\.csv$/i, "");
}

function column(table: Table, name: string): number[] {
  return table.rows.map((row) => row[name]);
}

function buildChart(spec: FigureSpec, tables: Table[]): ChartOptions {
  const xLog = !spec.linearX;
  const base = { xLog, xLabel: "reduced temperature t", guideX: 1 };
  switch (spec.kind) {
    case "energy":
    case "shapes": {
      const series: Series[] = tables.map((tab, i) => ({
        label: seriesLabel(tab.path),
        x: column(tab, "t"),
        y: column(tab, "phi"),
        dash: i === 1 ? "1,3" : i === 2 ? "6,3" : undefined,
      }));
      return {
        ...base,
        title:
          spec.kind === "energy"
            ? "Radiation energy over the Stefan-Boltzmann value"
            : "Energy ratio for different cavity shapes",
        yLabel: "E / E_SB",
        refY: 1,
        series,
      };
    }
    case "merge-T":
      return {
        ...base,
        title: "Temperature after adiabatic partition removal",
        yLabel: "T' / T",
        refY: 1,
        series: [{ label: "T'/T", x: column(tables[0], "t"),
                   y: column(tables[0], "T_ratio") }],
      };
    case "merge-N":
      return {
        ...base,
        title: "Photon number after adiabatic partition removal",
        yLabel: "N' / N",
        refY: 1,
        series: [{ label: "N'/N", x: column(tables[0], "t"),
                   y: column(tables[0], "N_ratio") }],
      };
    case "merge-E":
      return {
        ...base,
        title: "Energy supply for isothermal partition removal",
        yLabel: "dE / E_SB",
        refY: 0,
        series: [{ label: "dE/E_SB", x: column(tables[0], "t"),
                   y: column(tables[0], "dE_iso") }],
      };
    case "pressure": {
      const tab = tables[0];
      return {
        ...base,
        title: "Face pressures over the average pressure",
        yLabel: "p_i / p_av",
        refY: 1,
        series: [
          { label: "p_x/p_av", x: column(tab, "t"), y: column(tab, "px_over_pav") },
          { label: "p_y/p_av", x: column(tab, "t"), y: column(tab, "py_over_pav"),
            dash: "1,3" },
          { label: "p_z/p_av", x: column(tab, "t"), y: column(tab, "pz_over_pav"),
            dash: "6,3" },
        ],
      };
    }
  }
}

export function renderFigure(spec: FigureSpec): string {
  if (spec.inputs.length === 0) {
    throw new SchemaError("at least one input CSV is required");
  }
  if (spec.kind === "shapes" && spec.inputs.length < 2) {
    throw new SchemaError("shapes figures need at least two input CSVs");
  }
  if (spec.kind !== "energy" && spec.kind !== "shapes" && spec.inputs.length !== 1) {
    throw new SchemaError(`${spec.kind} figures take exactly one input CSV`);
  }
  const tableKind = TABLE_FOR_KIND[spec.kind];
  const tables = spec.inputs.map((file) => loadTable(tableKind, file));
  return renderLineChart(buildChart(spec, tables));
}

/** Render and write the SVG; the file is only created on success. */
export function writeFigure(spec: FigureSpec): void {
  const svg = renderFigure(spec);
  fs.mkdirSync(path.dirname(path.resolve(spec.output)), { recursive: true });
  fs.writeFileSync(spec.output, svg, "utf-8");
}
