// DOM rendering. One render(view) call redraws everything below the
// setup form; tiny app, so no diffing — full redraw is instant.

import { canSubmit, draftProblem, outcomeBanner, type GameView } from "./state.js";
import type { HistoryStep, Move } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function describeMove(move: Move): string {
  if (move.kind === "type1_pile1") return `Type I: ${move.k1} from pile 1`;
  if (move.kind === "type1_pile2") return `Type I: ${move.k2} from pile 2`;
  return `Type II: ${move.k1} from pile 1, ${move.k2} from pile 2`;
}

function renderPile(count: number, name: string): HTMLElement {
  const wrap = el("div", "pile");
  const stack = el("div", "stack");
  const shown = Math.min(count, 40);
  for (let i = 0; i < shown; i++) stack.appendChild(el("div", "token"));
  if (count > shown) stack.appendChild(el("div", "more", `+${count - shown}`));
  wrap.appendChild(stack);
  wrap.appendChild(el("div", "pile-label", `${name}: ${count}`));
  return wrap;
}

function renderHistory(history: HistoryStep[]): HTMLElement {
  const list = el("ol", "history");
  for (const step of history) {
    const li = el(
      "li",
      step.by,
      `${step.by}: ${describeMove(step.move)} → (${step.position[0]}, ${step.position[1]})`,
    );
    list.appendChild(li);
  }
  return list;
}

function renderOverlay(view: GameView): HTMLElement {
  const points = view.overlay ?? [];
  const maxCoord = Math.max(8, ...points.map(([x, y]) => Math.max(x, y)), ...view.piles);
  const size = 320;
  const pad = 24;
  const scale = (size - 2 * pad) / maxCoord;
  const sx = (v: number) => pad + v * scale;
  const sy = (v: number) => size - pad - v * scale;

  const svgNS = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(svgNS, "svg");
  svg.setAttribute("viewBox", `0 0 ${size} ${size}`);
  svg.setAttribute("class", "overlay-plot");

  const axes = document.createElementNS(svgNS, "path");
  axes.setAttribute("d", `M ${pad} ${pad} L ${pad} ${size - pad} L ${size - pad} ${size - pad}`);
  axes.setAttribute("class", "axes");
  svg.appendChild(axes);

  for (const [x, y] of points) {
    const dot = document.createElementNS(svgNS, "circle");
    dot.setAttribute("cx", String(sx(x)));
    dot.setAttribute("cy", String(sy(y)));
    dot.setAttribute("r", "4");
    dot.setAttribute("class", "p-dot");
    svg.appendChild(dot);
  }

  const [hx, hy] = view.piles;
  const here = document.createElementNS(svgNS, "circle");
  here.setAttribute("cx", String(sx(hx)));
  here.setAttribute("cy", String(sy(hy)));
  here.setAttribute("r", "6");
  here.setAttribute("class", "here-dot");
  svg.appendChild(here);

  const box = el("div", "overlay-box");
  box.appendChild(svg);
  box.appendChild(
    el(
      "div",
      "overlay-caption",
      `${points.length} P-positions for m=${view.m}; ring = current position` +
        (view.classification ? ` (${view.classification})` : ""),
    ),
  );
  return box;
}

export interface Controls {
  submit: HTMLButtonElement;
  feedback: HTMLElement;
  k1: HTMLInputElement;
  k2: HTMLInputElement;
}

export function render(view: GameView, controls: Controls): void {
  const board = document.getElementById("board")!;
  board.replaceChildren(renderPile(view.piles[0], "pile 1"), renderPile(view.piles[1], "pile 2"));

  const banner = document.getElementById("banner")!;
  const outcome = view.sessionId ? outcomeBanner(view.status) : null;
  banner.textContent = outcome ?? "";
  banner.className = outcome
    ? view.status === "engine_lost"
      ? "banner win"
      : "banner lose"
    : "banner";

  const statusLine = document.getElementById("status-line")!;
  if (view.sessionId === null) {
    statusLine.textContent = "start a game to play";
  } else if (view.status === "ongoing") {
    statusLine.textContent =
      `m = ${view.m}, position (${view.piles[0]}, ${view.piles[1]})` +
      (view.coach && view.classification ? ` — coach: ${view.classification}-position` : "");
  } else {
    statusLine.textContent = `m = ${view.m}, final position (${view.piles[0]}, ${view.piles[1]})`;
  }

  document.getElementById("history-box")!.replaceChildren(renderHistory(view.history));

  const overlayBox = document.getElementById("overlay")!;
  overlayBox.replaceChildren();
  if (view.coach && view.overlay) overlayBox.appendChild(renderOverlay(view));

  controls.k1.disabled = view.draft.kind === "type1_pile2";
  controls.k2.disabled = view.draft.kind === "type1_pile1";

  const problem = draftProblem(view);
  controls.submit.disabled = !canSubmit(view);
  controls.feedback.textContent = view.message ?? (problem && view.sessionId ? problem : "");
  controls.feedback.className = view.message ? "feedback error" : "feedback";
}
