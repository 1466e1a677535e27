// Thin typed client for the game server. Relative URLs by default so
// the app works when served by `modwythoff serve --static frontend/dist`;
// set window.MODWYTHOFF_API to point elsewhere during development.

import type {
  ClassifyResponse,
  Move,
  MoveResponse,
  PPositionsResponse,
  SessionCreated,
  SessionState,
} from "./types.js";

declare global {
  interface Window {
    MODWYTHOFF_API?: string;
  }
}

export class ApiRejection extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

function base(): string {
  return typeof window !== "undefined" && window.MODWYTHOFF_API
    ? window.MODWYTHOFF_API
    : "";
}

async function call<T>(method: string, path: string, body?: unknown): Promise<T> {
  const resp = await fetch(base() + path, {
    method,
    headers: body === undefined ? {} : { "Content-Type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  const payload = await resp.json();
  if (!resp.ok) {
    throw new ApiRejection(resp.status, payload.error ?? `HTTP ${resp.status}`);
  }
  return payload as T;
}

export function createSession(
  m: number,
  x: number,
  y: number,
  humanFirst: boolean,
): Promise<SessionCreated> {
  return call("POST", "/session", { m, x, y, human_first: humanFirst });
}

export function getSession(sessionId: string): Promise<SessionState> {
  return call("GET", `/session/${sessionId}`);
}

export function postMove(sessionId: string, move: Move): Promise<MoveResponse> {
  return call("POST", `/session/${sessionId}/move`, move);
}

export function classify(m: number, x: number, y: number): Promise<ClassifyResponse> {
  return call("GET", `/classify?m=${m}&x=${x}&y=${y}`);
}

export function pPositions(m: number): Promise<PPositionsResponse> {
  return call("GET", `/ppositions?m=${m}`);
}
