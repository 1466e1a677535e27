// Wiring: form events -> API calls -> state transitions -> render.

import { ApiRejection, createSession, getSession, pPositions, postMove } from "./api.js";
import { render, type Controls } from "./render.js";
import {
  applyMoveResponse,
  applySession,
  canSubmit,
  draftMove,
  initialView,
  type GameView,
} from "./state.js";
import type { MoveKind } from "./types.js";

let view: GameView = initialView();

const controls: Controls = {
  submit: document.getElementById("submit-move") as HTMLButtonElement,
  feedback: document.getElementById("feedback")!,
  k1: document.getElementById("k1") as HTMLInputElement,
  k2: document.getElementById("k2") as HTMLInputElement,
};

function update(next: GameView): void {
  view = next;
  render(view, controls);
}

function intValue(id: string): number {
  return Number((document.getElementById(id) as HTMLInputElement).value);
}

async function refreshOverlay(v: GameView): Promise<GameView> {
  if (!v.coach || v.overlay !== null || v.sessionId === null) return v;
  const resp = await pPositions(v.m);
  return { ...v, overlay: resp.positions };
}

async function startGame(event: Event): Promise<void> {
  event.preventDefault();
  const m = intValue("setup-m");
  const x = intValue("setup-x");
  const y = intValue("setup-y");
  if (!Number.isInteger(m) || m < 1) {
    update({ ...view, message: "m must be an integer >= 1" });
    return;
  }
  if (!Number.isInteger(x) || x < 0 || !Number.isInteger(y) || y < 0) {
    update({ ...view, message: "pile sizes must be nonnegative integers" });
    return;
  }
  const humanFirst = (document.getElementById("setup-first") as HTMLInputElement).checked;
  update({ ...view, busy: true, message: null });
  try {
    const created = await createSession(m, x, y, humanFirst);
    const session = await getSession(created.session_id);
    let next = applySession({ ...view, busy: false, overlay: null }, session);
    next = await refreshOverlay(next);
    update(next);
  } catch (e) {
    update({ ...view, busy: false, message: errorText(e) });
  }
}

async function submitMove(event: Event): Promise<void> {
  event.preventDefault();
  if (!canSubmit(view) || view.sessionId === null) return;
  const move = draftMove(view);
  update({ ...view, busy: true, message: null });
  try {
    const response = await postMove(view.sessionId, move);
    update(applyMoveResponse({ ...view, busy: false }, move, response));
  } catch (e) {
    // 422 carries the violated rule; the server stays authoritative even
    // though the client pre-checked.
    update({ ...view, busy: false, message: errorText(e) });
  }
}

function errorText(e: unknown): string {
  if (e instanceof ApiRejection) return e.message;
  return e instanceof Error ? `server unreachable: ${e.message}` : String(e);
}

function bindDraft(): void {
  const kindSelect = document.getElementById("move-kind") as HTMLSelectElement;
  kindSelect.addEventListener("change", () => {
    update({ ...view, draft: { ...view.draft, kind: kindSelect.value as MoveKind } });
  });
  for (const [id, key] of [
    ["k1", "k1"],
    ["k2", "k2"],
  ] as const) {
    const input = document.getElementById(id) as HTMLInputElement;
    input.addEventListener("input", () => {
      update({ ...view, draft: { ...view.draft, [key]: Number(input.value) } });
    });
  }
}

async function toggleCoach(): Promise<void> {
  const on = (document.getElementById("coach-toggle") as HTMLInputElement).checked;
  // toggling never alters game state, only what is displayed
  let next: GameView = { ...view, coach: on };
  try {
    next = await refreshOverlay(next);
  } catch (e) {
    next = { ...next, message: errorText(e) };
  }
  update(next);
}

document.getElementById("setup-form")!.addEventListener("submit", (e) => void startGame(e));
document.getElementById("move-form")!.addEventListener("submit", (e) => void submitMove(e));
document.getElementById("coach-toggle")!.addEventListener("change", () => void toggleCoach());
bindDraft();
render(view, controls);
