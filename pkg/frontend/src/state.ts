// Pure view-state: everything the page renders, plus the transitions
// applied to it. No DOM access here, so it is directly unit-testable.

import { illegalReason } from "./rules.js";
import type {
  HistoryStep,
  Label,
  Move,
  MoveKind,
  MoveResponse,
  SessionState,
  Status,
} from "./types.js";

export interface Draft {
  kind: MoveKind;
  k1: number;
  k2: number;
}

export interface GameView {
  sessionId: string | null;
  m: number;
  piles: [number, number];
  toMove: "human" | "engine";
  status: Status;
  history: HistoryStep[];
  draft: Draft;
  coach: boolean;
  overlay: [number, number][] | null; // P constellation, when coach is on
  classification: Label | null;
  message: string | null; // inline error / info line
  busy: boolean;
}

export function initialView(): GameView {
  return {
    sessionId: null,
    m: 2,
    piles: [0, 0],
    toMove: "human",
    status: "ongoing",
    history: [],
    draft: { kind: "type1_pile1", k1: 1, k2: 0 },
    coach: false,
    overlay: null,
    classification: null,
    message: null,
    busy: false,
  };
}

/** Normalize a draft to its kind's shape (Type I zeroes the other pile). */
export function normalizeDraft(draft: Draft): Draft {
  if (draft.kind === "type1_pile1") return { ...draft, k2: 0 };
  if (draft.kind === "type1_pile2") return { ...draft, k1: 0 };
  return draft;
}

export function draftMove(view: GameView): Move {
  const d = normalizeDraft(view.draft);
  return { kind: d.kind, k1: d.k1, k2: d.k2 };
}

/** Live legality feedback for the current draft; null means submittable. */
export function draftProblem(view: GameView): string | null {
  if (view.sessionId === null) return "no game in progress";
  if (view.status !== "ongoing") return "the game is over";
  if (view.busy || view.toMove !== "human") return "waiting for the engine";
  return illegalReason(view.piles, draftMove(view), view.m);
}

export function canSubmit(view: GameView): boolean {
  return draftProblem(view) === null;
}

export function applySession(view: GameView, session: SessionState): GameView {
  return {
    ...view,
    sessionId: session.session_id,
    m: session.m,
    piles: session.position,
    toMove: session.to_move,
    status: session.status,
    history: session.history,
    classification: null,
    message: null,
  };
}

export function applyMoveResponse(
  view: GameView,
  humanMove: Move,
  response: MoveResponse,
): GameView {
  const history = [...view.history];
  const afterHuman: [number, number] = [
    view.piles[0] - humanMove.k1,
    view.piles[1] - humanMove.k2,
  ];
  history.push({ by: "human", move: humanMove, position: afterHuman });
  if (response.engine_reply) {
    history.push({
      by: "engine",
      move: response.engine_reply,
      position: response.position,
    });
  }
  return {
    ...view,
    piles: response.position,
    status: response.status,
    toMove: response.status === "ongoing" ? "human" : view.toMove,
    history,
    classification: response.classification,
    message: null,
  };
}

/** The banner for terminal states (normal play: no move left = loss). */
export function outcomeBanner(status: Status): string | null {
  if (status === "engine_lost") return "You win! The engine has no move left.";
  if (status === "human_lost") return "You lose: no move left.";
  return null;
}
