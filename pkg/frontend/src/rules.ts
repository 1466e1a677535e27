// Client-side mirror of the game rules. The server stays authoritative
// (every submitted move is re-checked there); this copy powers live
// feedback on the move form and must agree with the server verdict —
// the fuzz test in tests/agreement.test.ts holds it to that.

import type { Move } from "./types.js";

export type Position = [number, number];

function isAmount(n: number): boolean {
  return Number.isInteger(n) && n >= 0;
}

/** True iff `move` is legal from `pos` under modulus `m`. */
export function isLegal(pos: Position, move: Move, m: number): boolean {
  const [x, y] = pos;
  const { kind, k1, k2 } = move;
  if (!isAmount(k1) || !isAmount(k2)) return false;
  if (kind === "type1_pile1") return k1 >= 1 && k2 === 0 && k1 <= x;
  if (kind === "type1_pile2") return k2 >= 1 && k1 === 0 && k2 <= y;
  return k1 >= 1 && k2 >= 1 && (k1 - k2) % m === 0 && k1 <= x && k2 <= y;
}

/** Why a draft is illegal, in the same vocabulary the server uses;
 * null when the draft is legal. */
export function illegalReason(pos: Position, move: Move, m: number): string | null {
  if (isLegal(pos, move, m)) return null;
  const [x, y] = pos;
  const { kind, k1, k2 } = move;
  if (!isAmount(k1) || !isAmount(k2)) return "amounts must be nonnegative integers";
  if (kind === "type1_pile1") {
    if (k1 < 1) return "zero removal";
    if (k2 !== 0) return "a Type I move touches a single pile";
    return "exceeds pile";
  }
  if (kind === "type1_pile2") {
    if (k2 < 1) return "zero removal";
    if (k1 !== 0) return "a Type I move touches a single pile";
    return "exceeds pile";
  }
  if (k1 < 1 || k2 < 1) return "zero removal";
  if ((k1 - k2) % m !== 0) return `congruence failure (amounts differ mod ${m})`;
  if (k1 > x || k2 > y) return "exceeds pile";
  return "illegal move";
}

/** Exact integer square root (inputs stay far below 2^53 here). */
export function isqrt(n: number): number {
  let s = Math.floor(Math.sqrt(n));
  while ((s + 1) * (s + 1) <= n) s += 1;
  while (s * s > n) s -= 1;
  return s;
}

/** floor(k * phi), integer-exact. */
export function lowerWythoff(k: number): number {
  return Math.floor((k + isqrt(5 * k * k)) / 2);
}

/** floor(m / phi): the P-position set for modulus m has
 * 2 * floorDivPhi(m) + 1 members. */
export function floorDivPhi(m: number): number {
  return lowerWythoff(m) - m;
}

export function expectedOverlayCount(m: number): number {
  return 2 * floorDivPhi(m) + 1;
}
