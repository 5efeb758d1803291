import { readFileSync } from "node:fs";

/** The feature columns of the export contract, in order. */
export const FEATURE_COLUMNS = [
  "a7", "a6", "a5", "a4", "a3", "a2", "a1", "a0",
  "disc_sign", "disc_log", "j0", "j1", "j2", "j3", "j4",
] as const;

export interface Dataset {
  x: Float64Array[];        // rows of feature values
  labels: string[];         // per-row class label
  classes: string[];        // sorted distinct labels
  featureNames: string[];
}

/** Split one CSV line honoring double-quoted fields (labels such as
 * "PSL(3,2)" carry a comma). */
export function splitCsvLine(line: string): string[] {
  const out: string[] = [];
  let field = "";
  let quoted = false;
  for (let i = 0; i < line.length; i++) {
    const ch = line[i];
    if (quoted) {
      if (ch === '"') {
        if (line[i + 1] === '"') {
          field += '"';
          i++;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch === '"') {
      quoted = true;
    } else if (ch === ",") {
      out.push(field);
      field = "";
    } else {
      field += ch;
    }
  }
  out.push(field);
  return out;
}

/** Parse a features.csv export. Extra (sidecar) columns after `label` are
 * tolerated and ignored; the 15 contract feature columns plus `label` are
 * required. */
export function loadFeaturesCsv(path: string): Dataset {
  const text = readFileSync(path, "utf-8");
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length < 2) {
    throw new Error(`${path}: no data rows`);
  }
  const header = splitCsvLine(lines[0]);
  const col = new Map<string, number>();
  header.forEach((name, i) => col.set(name, i));
  for (const name of FEATURE_COLUMNS) {
    if (!col.has(name)) {
      throw new Error(`${path}: missing contract column ${name}`);
    }
  }
  if (!col.has("label")) {
    throw new Error(`${path}: missing label column`);
  }
  const labelIdx = col.get("label")!;
  const featIdx = FEATURE_COLUMNS.map((name) => col.get(name)!);
  const x: Float64Array[] = [];
  const labels: string[] = [];
  for (let r = 1; r < lines.length; r++) {
    const parts = splitCsvLine(lines[r]);
    if (parts.length < header.length) {
      throw new Error(`${path}: row ${r} has ${parts.length} fields`);
    }
    const row = new Float64Array(featIdx.length);
    featIdx.forEach((ci, k) => {
      const v = Number(parts[ci]);
      if (!Number.isFinite(v)) {
        throw new Error(`${path}: row ${r} column ${FEATURE_COLUMNS[k]} is not numeric`);
      }
      row[k] = v;
    });
    x.push(row);
    labels.push(parts[labelIdx]);
  }
  const classes = [...new Set(labels)].sort();
  if (classes.length < 2) {
    throw new Error(`${path}: need at least two classes, got ${classes.length}`);
  }
  return { x, labels, classes, featureNames: [...FEATURE_COLUMNS] };
}
