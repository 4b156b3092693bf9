#!/usr/bin/env node
/**
 * photonbox-plot: turn photonbox CSV output into SVG figures.
 *
 *   photonbox-plot --kind energy  --input energy_cube.csv --output fig1.svg
 *   photonbox-plot --kind shapes  --input a.csv b.csv c.csv --output fig2.svg
 *   photonbox-plot --kind merge-T --input merge_adiabatic.csv --output fig3.svg
 *
 * Exits nonzero on missing files, schema mismatches, or empty tables; no
 * output file is written in that case.
 */

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { writeFigure } from "./figures";
import { FIGURE_KINDS, FigureKind } from "./schema";

export function main(argv: string[]): number {
  const args = yargs(argv)
    .option("kind", {
      choices: FIGURE_KINDS,
      demandOption: true,
      describe: "figure kind",
    })
    .option("input", {
      type: "string",
      array: true,
      demandOption: true,
      describe: "input CSV file(s) from the photonbox CLI",
    })
    .option("output", {
      type: "string",
      demandOption: true,
      describe: "output SVG path",
    })
    .option("linear-x", {
      type: "boolean",
      default: false,
      describe: "linear instead of logarithmic temperature axis",
    })
    .strict()
    .exitProcess(false)
    .parseSync();

  try {
    writeFigure({
      kind: args.kind as FigureKind,
      inputs: args.input as string[],
      output: args.output as string,
      linearX: args["linear-x"] as boolean,
    });
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 1;
  }
  return 0;
}

if (require.main === module) {
  process.exit(main(hideBin(process.argv)));
}
