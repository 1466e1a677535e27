import { describe, expect, it } from "vitest";

import {
  expectedOverlayCount,
  floorDivPhi,
  illegalReason,
  isLegal,
  isqrt,
  lowerWythoff,
} from "../src/rules.js";
import type { Move } from "../src/types.js";

const move = (kind: Move["kind"], k1: number, k2: number): Move => ({ kind, k1, k2 });

describe("isLegal", () => {
  it("accepts congruent two-pile removals", () => {
    expect(isLegal([5, 9], move("type2", 2, 5), 3)).toBe(true);
    expect(isLegal([5, 9], move("type2", 2, 4), 3)).toBe(false);
    expect(isLegal([1, 1], move("type2", 1, 1), 2)).toBe(true);
  });

  it("enforces single-pile shape for Type I", () => {
    expect(isLegal([3, 3], move("type1_pile1", 2, 0), 2)).toBe(true);
    expect(isLegal([3, 3], move("type1_pile1", 2, 1), 2)).toBe(false);
    expect(isLegal([3, 3], move("type1_pile2", 0, 3), 2)).toBe(true);
    expect(isLegal([3, 3], move("type1_pile2", 0, 4), 2)).toBe(false);
  });

  it("rejects zero, negative and fractional amounts", () => {
    expect(isLegal([3, 3], move("type1_pile1", 0, 0), 2)).toBe(false);
    expect(isLegal([3, 3], move("type2", 0, 2), 2)).toBe(false);
    expect(isLegal([3, 3], move("type2", -2, -2), 2)).toBe(false);
    expect(isLegal([3, 3], move("type2", 1.5, 1.5), 2)).toBe(false);
  });
});

describe("illegalReason", () => {
  it("is null exactly when the move is legal", () => {
    expect(illegalReason([3, 3], move("type2", 3, 3), 2)).toBeNull();
    expect(illegalReason([3, 3], move("type2", 1, 2), 2)).toContain("congruence");
    expect(illegalReason([3, 3], move("type1_pile1", 9, 0), 2)).toBe("exceeds pile");
    expect(illegalReason([3, 3], move("type1_pile2", 0, 0), 2)).toBe("zero removal");
  });
});

describe("golden-ratio helpers", () => {
  it("isqrt brackets correctly", () => {
    for (const n of [0, 1, 2, 24, 80, 123456, 10 ** 10]) {
      const s = isqrt(n);
      expect(s * s).toBeLessThanOrEqual(n);
      expect((s + 1) * (s + 1)).toBeGreaterThan(n);
    }
  });

  it("matches the known sequence prefixes", () => {
    expect([1, 2, 3, 4, 5, 6, 7].map(lowerWythoff)).toEqual([1, 3, 4, 6, 8, 9, 11]);
    expect(
      Array.from({ length: 20 }, (_, i) => floorDivPhi(i + 1)),
    ).toEqual([0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9, 10, 11, 11, 12]);
  });

  it("overlay count is odd and grows with m", () => {
    expect(expectedOverlayCount(1)).toBe(1);
    expect(expectedOverlayCount(2)).toBe(3);
    expect(expectedOverlayCount(5)).toBe(7);
    for (let m = 1; m < 60; m++) {
      expect(expectedOverlayCount(m) % 2).toBe(1);
      expect(expectedOverlayCount(m + 1)).toBeGreaterThanOrEqual(expectedOverlayCount(m));
    }
  });
});
