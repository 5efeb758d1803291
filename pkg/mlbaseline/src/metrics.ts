/** Classification metrics: confusion matrix, per-class precision/recall/F1,
 * balanced accuracy (mean per-class recall). */

export interface ClassReport {
  precision: number;
  recall: number;
  f1: number;
  support: number;
}

export interface Report {
  classes: string[];
  confusion: number[][];          // rows: true class, columns: predicted
  perClass: Record<string, ClassReport>;
  balancedAccuracy: number;
  accuracy: number;
  macroPrecision: number;
  macroF1: number;
}

export function confusionMatrix(
  classes: string[], yTrue: string[], yPred: string[],
): number[][] {
  const index = new Map(classes.map((c, i) => [c, i]));
  const m = classes.map(() => classes.map(() => 0));
  for (let i = 0; i < yTrue.length; i++) {
    const t = index.get(yTrue[i]);
    const p = index.get(yPred[i]);
    if (t === undefined || p === undefined) {
      throw new Error(`label outside class list: ${yTrue[i]} / ${yPred[i]}`);
    }
    m[t][p] += 1;
  }
  return m;
}

export function reportFromConfusion(classes: string[], m: number[][]): Report {
  const k = classes.length;
  const perClass: Record<string, ClassReport> = {};
  let correct = 0;
  let total = 0;
  let recallSum = 0;
  let precSum = 0;
  let f1Sum = 0;
  for (let c = 0; c < k; c++) {
    const support = m[c].reduce((a, b) => a + b, 0);
    const predicted = m.reduce((a, row) => a + row[c], 0);
    const tp = m[c][c];
    correct += tp;
    total += support;
    const precision = predicted > 0 ? tp / predicted : 0;
    const recall = support > 0 ? tp / support : 0;
    const f1 =
      precision + recall > 0 ? (2 * precision * recall) / (precision + recall) : 0;
    perClass[classes[c]] = { precision, recall, f1, support };
    recallSum += recall;
    precSum += precision;
    f1Sum += f1;
  }
  return {
    classes,
    confusion: m,
    perClass,
    balancedAccuracy: recallSum / k,
    accuracy: total > 0 ? correct / total : 0,
    macroPrecision: precSum / k,
    macroF1: f1Sum / k,
  };
}

export function evaluate(classes: string[], yTrue: string[], yPred: string[]): Report {
  return reportFromConfusion(classes, confusionMatrix(classes, yTrue, yPred));
}

/** Balanced accuracy of any constant predictor: recall 1 on one class,
 * 0 on the rest. */
export function majorityBaselineBalancedAccuracy(classCount: number): number {
  return 1 / classCount;
}

export function confusionCsv(classes: string[], m: number[][]): string {
  const lines = ["true\\pred," + classes.join(",")];
  classes.forEach((c, i) => {
    lines.push([c, ...m[i]].join(","));
  });
  return lines.join("\n") + "\n";
}
