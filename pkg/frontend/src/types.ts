/** Wire types for the /v1 session API. */

export type Mood = "sad" | "happy" | "excited";

export interface TableauView {
  shape: number[];
  rows: number[][];
}

export interface StateView {
  chips: number[];
  states: Mood[];
  word: number[];
  element_length: number;
  terminal: boolean;
  diverging?: boolean;
  tableau?: TableauView;
}

export interface EdgeSpec {
  from: number;
  to: number;
  arrows?: number;
}

export interface DiagramSpec {
  label?: string;
  n?: number;
  edges?: EdgeSpec[];
}

export interface SessionSpec {
  diagram: DiagramSpec;
  mode?: "modified" | "classical";
  active?: number[];
  initial?: number[];
  step_cap?: number;
}

export interface CreateResponse {
  id: string;
  state: StateView;
}

export interface CatalogFamily {
  family: string;
  ranks: number[];
}

/**
 * Resolved board structure: vertex count plus directed arrow multiplicities,
 * `arrows[v][u]` counting arrows from vertex u+1 into vertex v+1. Mirrors the
 * diagram the server plays on; the client uses it only for drawing and for
 * advisory what-if previews, never as game-state authority.
 */
export interface BoardShape {
  n: number;
  arrows: number[][];
  active: Set<number>;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`${status}: ${detail}`);
  }
}
