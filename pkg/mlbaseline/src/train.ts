import { Dataset } from "./csv.js";
import { DEFAULT_CONFIG, BoostConfig, FittedModel, fitBoostedModel, predictLabel } from "./histgb.js";
import { Report, evaluate, majorityBaselineBalancedAccuracy } from "./metrics.js";
import { classWeights, stratifiedSplit } from "./split.js";

export interface TrainConfig {
  learningRate: number;
  maxIter: number;
  earlyStop: number;
  l2: number;
  trainFraction: number;
  seed: number;
  useWeights: boolean;
}

export const DEFAULT_TRAIN: TrainConfig = {
  learningRate: 0.08,
  maxIter: 500,
  earlyStop: 20,
  l2: 1e-4,
  trainFraction: 0.6,
  seed: 0,
  useWeights: true,
};

export interface TrainResult {
  model: FittedModel;
  report: Report;
  weights: Record<string, number>;
  majorityBaseline: number;
  config: TrainConfig;
  testCount: number;
  trainCount: number;
}

export function train(data: Dataset, config: Partial<TrainConfig> = {}): TrainResult {
  const cfg: TrainConfig = { ...DEFAULT_TRAIN, ...config };
  if (![0.5, 0.6, 0.8].includes(cfg.trainFraction)) {
    throw new Error(`train fraction must be 0.5, 0.6 or 0.8, got ${cfg.trainFraction}`);
  }
  const { trainIdx, testIdx } = stratifiedSplit(data.labels, cfg.trainFraction, cfg.seed);
  const trainLabels = trainIdx.map((i) => data.labels[i]);
  const weightsByClass = classWeights(trainLabels);
  const sampleWeights = new Float64Array(trainIdx.length);
  trainIdx.forEach((rowIdx, j) => {
    sampleWeights[j] = cfg.useWeights ? weightsByClass.get(data.labels[rowIdx])! : 1;
  });
  const boostCfg: BoostConfig = {
    ...DEFAULT_CONFIG,
    learningRate: cfg.learningRate,
    maxIter: cfg.maxIter,
    earlyStop: cfg.earlyStop,
    l2: cfg.l2,
    seed: cfg.seed,
  };
  const model = fitBoostedModel(
    trainIdx.map((i) => data.x[i]),
    trainLabels,
    data.classes,
    sampleWeights,
    boostCfg,
  );
  const yTrue = testIdx.map((i) => data.labels[i]);
  const yPred = testIdx.map((i) => predictLabel(model, data.x[i]));
  const report = evaluate(data.classes, yTrue, yPred);
  const weights: Record<string, number> = {};
  for (const c of data.classes) {
    weights[c] = weightsByClass.get(c) ?? 1;
  }
  return {
    model,
    report,
    weights,
    majorityBaseline: majorityBaselineBalancedAccuracy(data.classes.length),
    config: cfg,
    testCount: testIdx.length,
    trainCount: trainIdx.length,
  };
}

/** Stable JSON for the report file; numbers rounded to 12 significant
 * digits so reruns compare byte for byte. */
export function reportJson(result: TrainResult): string {
  const round = (v: number) => Number(v.toPrecision(12));
  const perClass: Record<string, unknown> = {};
  for (const c of result.report.classes) {
    const r = result.report.perClass[c];
    perClass[c] = {
      precision: round(r.precision),
      recall: round(r.recall),
      f1: round(r.f1),
      support: r.support,
    };
  }
  return JSON.stringify(
    {
      balanced_accuracy: round(result.report.balancedAccuracy),
      accuracy: round(result.report.accuracy),
      macro_precision: round(result.report.macroPrecision),
      macro_f1: round(result.report.macroF1),
      majority_baseline: round(result.majorityBaseline),
      iterations: result.model.iterations,
      train_rows: result.trainCount,
      test_rows: result.testCount,
      classes: result.report.classes,
      class_weights: Object.fromEntries(
        Object.entries(result.weights).map(([k, v]) => [k, round(v)]),
      ),
      per_class: perClass,
      confusion: result.report.confusion,
      config: {
        learning_rate: result.config.learningRate,
        max_iter: result.config.maxIter,
        early_stop: result.config.earlyStop,
        l2: result.config.l2,
        train_fraction: result.config.trainFraction,
        seed: result.config.seed,
        weights_enabled: result.config.useWeights,
      },
    },
    null,
    2,
  );
}
