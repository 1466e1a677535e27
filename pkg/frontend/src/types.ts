// Wire types, matching the server's JSON API exactly.

export type MoveKind = "type1_pile1" | "type1_pile2" | "type2";

export interface Move {
  kind: MoveKind;
  k1: number;
  k2: number;
}

export type Status = "ongoing" | "human_lost" | "engine_lost";
export type Label = "P" | "N";

export interface HistoryStep {
  by: "human" | "engine";
  move: Move;
  position: [number, number];
}

export interface SessionCreated {
  session_id: string;
  position: [number, number];
  status: Status;
}

export interface SessionState {
  session_id: string;
  m: number;
  position: [number, number];
  to_move: "human" | "engine";
  status: Status;
  history: HistoryStep[];
}

export interface MoveResponse {
  engine_reply: Move | null;
  position: [number, number];
  status: Status;
  classification: Label;
}

export interface ClassifyResponse {
  label: Label;
  winning_move: Move | null;
}

export interface PPositionsResponse {
  count: number;
  positions: [number, number][];
}
