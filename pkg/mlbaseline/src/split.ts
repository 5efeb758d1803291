import { Rng } from "./rng.js";

/** Per-class sample weights proportional to sqrt(median count / count). */
export function classWeights(labels: string[]): Map<string, number> {
  const counts = new Map<string, number>();
  for (const lab of labels) {
    counts.set(lab, (counts.get(lab) ?? 0) + 1);
  }
  const values = [...counts.values()].sort((a, b) => a - b);
  const n = values.length;
  const median =
    n % 2 === 1 ? values[(n - 1) / 2] : (values[n / 2 - 1] + values[n / 2]) / 2;
  const out = new Map<string, number>();
  for (const [lab, c] of counts) {
    out.set(lab, Math.sqrt(median / c));
  }
  return out;
}

export interface Split {
  trainIdx: number[];
  testIdx: number[];
}

/** Stratified split preserving per-class proportions to rounding; both sides
 * keep at least one row of every class. Deterministic under the seed. */
export function stratifiedSplit(
  labels: string[],
  trainFraction: number,
  seed: number,
): Split {
  if (!(trainFraction > 0 && trainFraction < 1)) {
    throw new Error(`train fraction ${trainFraction} out of range`);
  }
  const byClass = new Map<string, number[]>();
  labels.forEach((lab, i) => {
    if (!byClass.has(lab)) byClass.set(lab, []);
    byClass.get(lab)!.push(i);
  });
  const rng = new Rng(seed);
  const trainIdx: number[] = [];
  const testIdx: number[] = [];
  for (const lab of [...byClass.keys()].sort()) {
    const idx = [...byClass.get(lab)!];
    if (idx.length < 2) {
      throw new Error(`class ${lab} has fewer than 2 rows`);
    }
    rng.shuffle(idx);
    let k = Math.floor(idx.length * trainFraction + 0.5);
    k = Math.max(1, Math.min(k, idx.length - 1));
    trainIdx.push(...idx.slice(0, k));
    testIdx.push(...idx.slice(k));
  }
  trainIdx.sort((a, b) => a - b);
  testIdx.sort((a, b) => a - b);
  return { trainIdx, testIdx };
}
