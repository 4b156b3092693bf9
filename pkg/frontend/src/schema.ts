/**
 * Column contracts for the CSV files emitted by the photonbox CLI and the
 * figure kinds built on top of them.
 */

import { z } from "zod";

export type FigureKind =
  | "energy"
  | "shapes"
  | "merge-T"
  | "merge-N"
  | "merge-E"
  | "pressure";

export const FIGURE_KINDS: FigureKind[] = [
  "energy",
  "shapes",
  "merge-T",
  "merge-N",
  "merge-E",
  "pressure",
];

const num = z.number().finite();

export const energyRow = z
  .object({
    t: num.positive(),
    phi: num,
    E_red: num,
    S_red: num,
    N: num,
    C_red: num,
    omega_e: num,
  })
  .strict();

export const mergeAdiabaticRow = z
  .object({ t: num.positive(), T_ratio: num, N_ratio: num })
  .strict();

export const mergeIsothermalRow = z
  .object({ t: num.positive(), dE_iso: num })
  .strict();

export const pressureRow = z
  .object({
    T_K: num.positive(),
    t: num.positive(),
    px_over_pav: num,
    py_over_pav: num,
    pz_over_pav: num,
  })
  .strict();

export type TableKind = "energy" | "merge-adiabatic" | "merge-isothermal" | "pressure";

export const TABLE_FOR_KIND: Record<FigureKind, TableKind> = {
  energy: "energy",
  shapes: "energy",
  "merge-T": "merge-adiabatic",
  "merge-N": "merge-adiabatic",
  "merge-E": "merge-isothermal",
  pressure: "pressure",
};

export const HEADERS: Record<TableKind, string[]> = {
  energy: ["t", "phi", "E_red", "S_red", "N", "C_red", "omega_e"],
  "merge-adiabatic": ["t", "T_ratio", "N_ratio"],
  "merge-isothermal": ["t", "dE_iso"],
  pressure: ["T_K", "t", "px_over_pav", "py_over_pav", "pz_over_pav"],
};

export const ROW_SCHEMA: Record<TableKind, z.ZodTypeAny> = {
  energy: energyRow,
  "merge-adiabatic": mergeAdiabaticRow,
  "merge-isothermal": mergeIsothermalRow,
  pressure: pressureRow,
};
