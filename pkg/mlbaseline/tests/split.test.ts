import { describe, expect, it } from "vitest";
import { classWeights, stratifiedSplit } from "../src/split.js";

describe("class weights", () => {
  it("matches sqrt(median/count)", () => {
    const labels = [
      ...Array(100).fill("A"),
      ...Array(400).fill("B"),
      ...Array(250).fill("C"),
    ];
    const w = classWeights(labels);
    expect(w.get("A")).toBeCloseTo(Math.sqrt(2.5), 12);
    expect(w.get("B")).toBeCloseTo(Math.sqrt(0.625), 12);
    expect(w.get("C")).toBeCloseTo(1.0, 12);
  });

  it("uniform counts give unit weights", () => {
    const labels = ["A", "A", "B", "B"];
    const w = classWeights(labels);
    expect(w.get("A")).toBe(1);
    expect(w.get("B")).toBe(1);
  });
});

describe("stratified split", () => {
  const labels = [
    ...Array(50).fill("A"),
    ...Array(30).fill("B"),
    ...Array(4).fill("C"),
  ];

  it("preserves proportions to rounding", () => {
    const { trainIdx, testIdx } = stratifiedSplit(labels, 0.6, 7);
    expect(trainIdx.length + testIdx.length).toBe(labels.length);
    const trainA = trainIdx.filter((i) => labels[i] === "A").length;
    const trainC = trainIdx.filter((i) => labels[i] === "C").length;
    expect(Math.abs(trainA - 30)).toBeLessThanOrEqual(1);
    expect(Math.abs(trainC - 2.4)).toBeLessThanOrEqual(1);
  });

  it("is deterministic per seed and disjoint", () => {
    const s1 = stratifiedSplit(labels, 0.5, 3);
    const s2 = stratifiedSplit(labels, 0.5, 3);
    const s3 = stratifiedSplit(labels, 0.5, 4);
    expect(s1).toEqual(s2);
    expect(s1).not.toEqual(s3);
    const overlap = new Set(s1.trainIdx);
    expect(s1.testIdx.some((i) => overlap.has(i))).toBe(false);
  });

  it("keeps every class on both sides", () => {
    const { trainIdx, testIdx } = stratifiedSplit(labels, 0.8, 11);
    for (const lab of ["A", "B", "C"]) {
      expect(trainIdx.some((i) => labels[i] === lab)).toBe(true);
      expect(testIdx.some((i) => labels[i] === lab)).toBe(true);
    }
  });

  it("rejects singleton classes and bad fractions", () => {
    expect(() => stratifiedSplit(["A", "A", "B"], 0.5, 0)).toThrow();
    expect(() => stratifiedSplit(labels, 1.2, 0)).toThrow();
  });
});
