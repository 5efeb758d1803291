/** Histogram-based gradient boosting for multiclass classification.
 *
 * Features are quantile-binned (up to 256 bins); each boosting iteration
 * fits one depth-bounded regression tree per class on the softmax
 * gradients/hessians, with an L2 term in the leaf values and shrinkage by
 * the learning rate. Early stopping watches the log-loss on a held-out
 * fraction of the training rows. Everything is deterministic given the
 * configuration.
 */

import { Rng } from "./rng.js";

export interface BoostConfig {
  learningRate: number;
  maxIter: number;
  earlyStop: number;    // iterations without validation improvement
  l2: number;
  maxBins: number;
  maxLeafNodes: number;
  minSamplesLeaf: number;
  validationFraction: number;
  seed: number;
}

export const DEFAULT_CONFIG: BoostConfig = {
  learningRate: 0.08,
  maxIter: 500,
  earlyStop: 20,
  l2: 1e-4,
  maxBins: 256,
  maxLeafNodes: 31,
  minSamplesLeaf: 5,
  validationFraction: 0.1,
  seed: 0,
};

interface TreeNode {
  feature: number;
  bin: number;          // go left when binned value <= bin
  left: number;
  right: number;
  value: number;        // leaf value when feature < 0
}

interface Tree {
  nodes: TreeNode[];
}

export interface FittedModel {
  classes: string[];
  binEdges: number[][];
  baseline: number[];
  trees: Tree[][];      // trees[iteration][class]
  iterations: number;
  learningRate: number;
}

export function quantileBinEdges(values: number[], maxBins: number): number[] {
  const sorted = [...values].sort((a, b) => a - b);
  const distinct: number[] = [];
  for (const v of sorted) {
    if (distinct.length === 0 || v !== distinct[distinct.length - 1]) {
      distinct.push(v);
    }
  }
  if (distinct.length <= maxBins) {
    const edges: number[] = [];
    for (let i = 0; i + 1 < distinct.length; i++) {
      edges.push((distinct[i] + distinct[i + 1]) / 2);
    }
    return edges;
  }
  const edges: number[] = [];
  for (let b = 1; b < maxBins; b++) {
    const q = sorted[Math.floor((b * sorted.length) / maxBins)];
    if (edges.length === 0 || q > edges[edges.length - 1]) {
      edges.push(q);
    }
  }
  return edges;
}

export function binValue(edges: number[], v: number): number {
  let lo = 0;
  let hi = edges.length;
  while (lo < hi) {
    const mid = (lo + hi) >> 1;
    if (v <= edges[mid]) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

function softmaxRow(scores: Float64Array, k: number, out: Float64Array): void {
  let max = -Infinity;
  for (let c = 0; c < k; c++) max = Math.max(max, scores[c]);
  let sum = 0;
  for (let c = 0; c < k; c++) {
    out[c] = Math.exp(scores[c] - max);
    sum += out[c];
  }
  for (let c = 0; c < k; c++) out[c] /= sum;
}

interface LeafCandidate {
  rows: Int32Array;
  nodeIndex: number;
  gain: number;
  feature: number;
  bin: number;
  sumG: number;
  sumH: number;
}

/** One regression tree on (gradient, hessian) pairs over binned features. */
function fitTree(
  binned: Uint8Array[] | Uint16Array[],
  nBins: number[],
  rows: Int32Array,
  g: Float64Array,
  h: Float64Array,
  cfg: BoostConfig,
): Tree {
  const nodes: TreeNode[] = [];
  const leafValue = (sumG: number, sumH: number) =>
    -sumG / (sumH + cfg.l2);

  function bestSplit(rowSet: Int32Array): {
    gain: number; feature: number; bin: number;
    sumG: number; sumH: number;
  } {
    let totG = 0;
    let totH = 0;
    for (const r of rowSet) {
      totG += g[r];
      totH += h[r];
    }
    const parentScore = (totG * totG) / (totH + cfg.l2);
    let best = { gain: 0, feature: -1, bin: -1, sumG: totG, sumH: totH };
    const nFeatures = binned.length;
    for (let f = 0; f < nFeatures; f++) {
      const bins = nBins[f];
      if (bins <= 1) continue;
      const histG = new Float64Array(bins);
      const histH = new Float64Array(bins);
      const histN = new Int32Array(bins);
      const col = binned[f];
      for (const r of rowSet) {
        const b = col[r];
        histG[b] += g[r];
        histH[b] += h[r];
        histN[b] += 1;
      }
      let leftG = 0;
      let leftH = 0;
      let leftN = 0;
      for (let b = 0; b + 1 < bins; b++) {
        leftG += histG[b];
        leftH += histH[b];
        leftN += histN[b];
        const rightN = rowSet.length - leftN;
        if (leftN < cfg.minSamplesLeaf || rightN < cfg.minSamplesLeaf) continue;
        const rightG = totG - leftG;
        const rightH = totH - leftH;
        const gain =
          (leftG * leftG) / (leftH + cfg.l2) +
          (rightG * rightG) / (rightH + cfg.l2) -
          parentScore;
        if (gain > best.gain + 1e-12) {
          best = { gain, feature: f, bin: b, sumG: totG, sumH: totH };
        }
      }
    }
    return best;
  }

  // best-first growth up to maxLeafNodes
  const rootSplit = bestSplit(rows);
  nodes.push({ feature: -1, bin: -1, left: -1, right: -1,
               value: leafValue(rootSplit.sumG, rootSplit.sumH) });
  let leaves = 1;
  const heap: LeafCandidate[] = [];
  if (rootSplit.feature >= 0) {
    heap.push({ rows, nodeIndex: 0, ...rootSplit });
  }
  while (heap.length > 0 && leaves < cfg.maxLeafNodes) {
    heap.sort((a, b) => b.gain - a.gain);
    const cand = heap.shift()!;
    const { feature, bin } = cand;
    const leftRows: number[] = [];
    const rightRows: number[] = [];
    const col = binned[feature];
    for (const r of cand.rows) {
      (col[r] <= bin ? leftRows : rightRows).push(r);
    }
    const left = new Int32Array(leftRows);
    const right = new Int32Array(rightRows);
    const leftSplit = bestSplit(left);
    const rightSplit = bestSplit(right);
    const leftIndex = nodes.length;
    nodes.push({ feature: -1, bin: -1, left: -1, right: -1,
                 value: leafValue(leftSplit.sumG, leftSplit.sumH) });
    const rightIndex = nodes.length;
    nodes.push({ feature: -1, bin: -1, left: -1, right: -1,
                 value: leafValue(rightSplit.sumG, rightSplit.sumH) });
    nodes[cand.nodeIndex] = {
      feature, bin, left: leftIndex, right: rightIndex, value: 0,
    };
    leaves += 1;
    if (leftSplit.feature >= 0) {
      heap.push({ rows: left, nodeIndex: leftIndex, ...leftSplit });
    }
    if (rightSplit.feature >= 0) {
      heap.push({ rows: right, nodeIndex: rightIndex, ...rightSplit });
    }
  }
  return { nodes };
}

function treePredictBinned(
  tree: Tree, binned: Uint8Array[] | Uint16Array[], row: number,
): number {
  let i = 0;
  for (;;) {
    const node = tree.nodes[i];
    if (node.feature < 0) return node.value;
    i = binned[node.feature][row] <= node.bin ? node.left : node.right;
  }
}

export function treePredict(
  tree: Tree, binEdges: number[][], x: Float64Array,
): number {
  let i = 0;
  for (;;) {
    const node = tree.nodes[i];
    if (node.feature < 0) return node.value;
    i = binValue(binEdges[node.feature], x[node.feature]) <= node.bin
      ? node.left
      : node.right;
  }
}

export function fitBoostedModel(
  x: Float64Array[],
  labels: string[],
  classes: string[],
  sampleWeights: Float64Array,
  cfg: BoostConfig,
): FittedModel {
  const n = x.length;
  const d = x[0].length;
  const k = classes.length;
  const classIndex = new Map(classes.map((c, i) => [c, i]));
  const y = new Int32Array(n);
  labels.forEach((lab, i) => {
    y[i] = classIndex.get(lab)!;
  });

  const binEdges: number[][] = [];
  for (let f = 0; f < d; f++) {
    binEdges.push(quantileBinEdges(x.map((row) => row[f]), cfg.maxBins));
  }
  const binned: Uint16Array[] = [];
  for (let f = 0; f < d; f++) {
    const col = new Uint16Array(n);
    for (let i = 0; i < n; i++) col[i] = binValue(binEdges[f], x[i][f]);
    binned.push(col);
  }
  const nBins = binEdges.map((e) => e.length + 1);

  // held-out rows for early stopping, stratified by a seeded shuffle
  const rng = new Rng(cfg.seed ^ 0x9e3779b9);
  const order = Array.from({ length: n }, (_, i) => i);
  rng.shuffle(order);
  const nVal = Math.max(k, Math.floor(n * cfg.validationFraction));
  const valRows = new Int32Array(order.slice(0, nVal).sort((a, b) => a - b));
  const fitRows = new Int32Array(order.slice(nVal).sort((a, b) => a - b));

  // weighted log-prior baseline
  const baseline = new Array(k).fill(0);
  {
    const wsum = new Float64Array(k);
    let tot = 0;
    for (let i = 0; i < n; i++) {
      wsum[y[i]] += sampleWeights[i];
      tot += sampleWeights[i];
    }
    for (let c = 0; c < k; c++) {
      baseline[c] = Math.log(Math.max(wsum[c], 1e-12) / tot);
    }
  }

  const scores: Float64Array[] = [];
  for (let i = 0; i < n; i++) {
    scores.push(Float64Array.from(baseline));
  }
  const prob = new Float64Array(k);
  const g = new Float64Array(n);
  const h = new Float64Array(n);
  const trees: Tree[][] = [];

  const valLoss = () => {
    let loss = 0;
    let wsum = 0;
    for (const i of valRows) {
      softmaxRow(scores[i], k, prob);
      loss -= sampleWeights[i] * Math.log(Math.max(prob[y[i]], 1e-15));
      wsum += sampleWeights[i];
    }
    return loss / Math.max(wsum, 1e-15);
  };

  let best = valLoss();
  let sinceBest = 0;
  for (let iter = 0; iter < cfg.maxIter; iter++) {
    const layer: Tree[] = [];
    const probs: Float64Array[] = [];
    for (const i of fitRows) {
      const p = new Float64Array(k);
      softmaxRow(scores[i], k, p);
      probs.push(p);
    }
    for (let c = 0; c < k; c++) {
      fitRows.forEach((i, j) => {
        const p = probs[j][c];
        const target = y[i] === c ? 1 : 0;
        g[i] = sampleWeights[i] * (p - target);
        h[i] = Math.max(sampleWeights[i] * p * (1 - p), 1e-12);
      });
      const tree = fitTree(binned, nBins, fitRows, g, h, cfg);
      layer.push(tree);
      for (let i = 0; i < n; i++) {
        scores[i][c] += cfg.learningRate * treePredictBinned(tree, binned, i);
      }
    }
    trees.push(layer);
    const loss = valLoss();
    if (loss < best - 1e-7) {
      best = loss;
      sinceBest = 0;
    } else {
      sinceBest += 1;
      if (sinceBest >= cfg.earlyStop) break;
    }
  }
  return {
    classes, binEdges, baseline, trees,
    iterations: trees.length, learningRate: cfg.learningRate,
  };
}

export function predictScores(model: FittedModel, x: Float64Array): Float64Array {
  const k = model.classes.length;
  const out = Float64Array.from(model.baseline);
  for (const layer of model.trees) {
    for (let c = 0; c < k; c++) {
      out[c] += model.learningRate * treePredict(layer[c], model.binEdges, x);
    }
  }
  return out;
}

export function predictLabel(model: FittedModel, x: Float64Array): string {
  const scores = predictScores(model, x);
  let best = 0;
  for (let c = 1; c < scores.length; c++) {
    if (scores[c] > scores[best]) best = c;
  }
  return model.classes[best];
}
