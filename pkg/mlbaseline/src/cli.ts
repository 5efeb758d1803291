/** Train the baseline on a features.csv export and write report.json and
 * confusion.csv.
 *
 * Usage:
 *   node dist/cli.js --csv features.csv --out report.json \
 *       [--confusion confusion.csv] [--seed 0] [--train-fraction 0.6] \
 *       [--no-weights] [--max-iter 500]
 */

import { writeFileSync } from "node:fs";
import { loadFeaturesCsv } from "./csv.js";
import { confusionCsv } from "./metrics.js";
import { DEFAULT_TRAIN, reportJson, train } from "./train.js";

function parseArgs(argv: string[]): Map<string, string | boolean> {
  const out = new Map<string, string | boolean>();
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    if (!a.startsWith("--")) {
      throw new Error(`unexpected argument ${a}`);
    }
    const eq = a.indexOf("=");
    if (eq >= 0) {
      out.set(a.slice(2, eq), a.slice(eq + 1));
    } else if (a === "--no-weights") {
      out.set("no-weights", true);
    } else {
      out.set(a.slice(2), argv[++i]);
    }
  }
  return out;
}

export function main(argv: string[]): number {
  let args: Map<string, string | boolean>;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(String(err));
    return 2;
  }
  const csv = args.get("csv");
  if (typeof csv !== "string") {
    console.error("--csv <features.csv> is required");
    return 2;
  }
  try {
    const data = loadFeaturesCsv(csv);
    const result = train(data, {
      seed: args.has("seed") ? Number(args.get("seed")) : DEFAULT_TRAIN.seed,
      trainFraction: args.has("train-fraction")
        ? Number(args.get("train-fraction"))
        : DEFAULT_TRAIN.trainFraction,
      maxIter: args.has("max-iter")
        ? Number(args.get("max-iter"))
        : DEFAULT_TRAIN.maxIter,
      useWeights: !args.get("no-weights"),
    });
    const json = reportJson(result);
    const outPath = typeof args.get("out") === "string" ? (args.get("out") as string) : "report.json";
    writeFileSync(outPath, json + "\n");
    const confPath = args.get("confusion");
    if (typeof confPath === "string") {
      writeFileSync(confPath, confusionCsv(result.report.classes, result.report.confusion));
    }
    console.error(
      `balanced accuracy ${result.report.balancedAccuracy.toFixed(4)} ` +
        `(majority baseline ${result.majorityBaseline.toFixed(4)}), ` +
        `${result.model.iterations} iterations`,
    );
    return 0;
  } catch (err) {
    console.error(String(err));
    return 1;
  }
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
