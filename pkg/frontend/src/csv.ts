/** CSV loading and validation against the CLI column contract. */

import * as fs from "fs";
import Papa from "papaparse";

import { HEADERS, ROW_SCHEMA, TableKind } from "./schema";

export class SchemaError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "SchemaError";
  }
}

export interface Table {
  kind: TableKind;
  path: string;
  rows: Record<string, number>[];
}

export function loadTable(kind: TableKind, path: string): Table {
  if (!fs.existsSync(path)) {
    throw new SchemaError(`input file not found: ${path}`);
  }
  const text = fs.readFileSync(path, "utf-8");
  const parsed = Papa.parse<Record<string, unknown>>(text, {
    header: true,
    dynamicTyping: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new SchemaError(`${path}: malformed CSV (${first.message})`);
  }
  const expected = HEADERS[kind];
  const fields = parsed.meta.fields ?? [];
  if (JSON.stringify(fields) !== JSON.stringify(expected)) {
    throw new SchemaError(
      `${path}: header [${fields.join(",")}] does not match the ` +
        `${kind} contract [${expected.join(",")}]`,
    );
  }
  if (parsed.data.length === 0) {
    throw new SchemaError(`${path}: no data rows`);
  }
  const schema = ROW_SCHEMA[kind];
  const rows = parsed.data.map((row, i) => {
    const check = schema.safeParse(row);
    if (!check.success) {
      throw new SchemaError(`${path}: row ${i + 2}: ${check.error.message}`);
    }
    return check.data as Record<string, number>;
  });
  return { kind, path, rows };
}
