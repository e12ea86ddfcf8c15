/** Board controller: one session, serialized mutations, no optimistic state. */

import { SessionApi } from "./api.js";
import { renderBoard, validateStateView } from "./board.js";
import { resolveShape } from "./firing.js";
import { layoutVertices, Point } from "./layout.js";
import { renderStatus, renderTableau, renderWhatIf, renderWordStrip } from "./panels.js";
import { ApiError, BoardShape, SessionSpec, StateView } from "./types.js";

export interface BoardElements {
  board: SVGSVGElement;
  word: HTMLElement;
  tableau: HTMLElement;
  whatif: HTMLElement;
  status: HTMLElement;
  banner: HTMLElement;
  undo: HTMLButtonElement;
  auto: HTMLButtonElement;
}

export class BoardController {
  private sessionId: string | null = null;
  private shape: BoardShape | null = null;
  private points: Point[] = [];
  private state: StateView | null = null;
  private busy = false;
  private inflight: Promise<void> = Promise.resolve();

  constructor(
    private readonly api: SessionApi,
    private readonly el: BoardElements,
  ) {
    el.undo.addEventListener("click", () => void this.undo());
    el.auto.addEventListener("click", () => void this.autoPlay());
  }

  get currentState(): StateView | null {
    return this.state;
  }

  /** Settles once the currently running mutation (if any) has applied. */
  whenIdle(): Promise<void> {
    return this.inflight;
  }

  async start(spec: SessionSpec): Promise<void> {
    this.shape = resolveShape(spec.diagram, spec.active);
    this.points = layoutVertices(this.shape, spec.diagram.label);
    const created = await this.api.createSession(spec);
    this.sessionId = created.id;
    this.apply(created.state);
  }

  /** Rendering is always a function of the last server StateView. */
  private apply(state: StateView): void {
    if (!this.shape) return;
    const problem = validateStateView(state, this.shape.n);
    if (problem) {
      this.el.banner.textContent = `bad state from server: ${problem}`;
      this.el.banner.classList.remove("hidden");
      return; // keep the previous board frozen
    }
    const previous = this.state;
    this.state = state;
    this.el.banner.classList.add("hidden");
    renderBoard(this.el.board, this.shape, this.points, state, {
      onFire: (vertex) => void this.fire(vertex),
    });
    if (previous && previous.chips.length === state.chips.length) {
      for (let v = 1; v <= this.shape.n; v++) {
        if (state.chips[v - 1] !== previous.chips[v - 1]) {
          this.el.board
            .querySelector(`g[data-vertex="${v}"]`)
            ?.classList.add("pulse");
        }
      }
    }
    renderWordStrip(this.el.word, state.word);
    renderTableau(this.el.tableau, state.tableau);
    renderWhatIf(this.el.whatif, this.shape, state, (vertex) =>
      void this.fire(vertex),
    );
    renderStatus(this.el.status, state);
  }

  /** Clicks during an in-flight request are dropped, not queued twice. */
  async fire(vertex: number): Promise<void> {
    if (!this.sessionId || this.busy) return;
    this.busy = true;
    const work = (async () => {
      try {
        const state = await this.api.fire(this.sessionId!, vertex);
        this.apply(state);
      } catch (error) {
        this.rejectFire(vertex, error);
      } finally {
        this.busy = false;
      }
    })();
    this.inflight = work;
    return work;
  }

  /** Conflict: shake the vertex and explain its actual mood; no state change. */
  private rejectFire(vertex: number, error: unknown): void {
    const group = this.el.board.querySelector(
      `g[data-vertex="${vertex}"]`,
    );
    if (group) {
      group.classList.add("rejected");
      const note = document.createElementNS(
        "http://www.w3.org/2000/svg",
        "title",
      );
      note.textContent =
        error instanceof ApiError && error.status === 409
          ? error.detail
          : "move rejected; the board is unchanged";
      group.appendChild(note);
    }
    if (!(error instanceof ApiError)) {
      this.el.banner.textContent =
        "network problem; nothing changed — try again";
      this.el.banner.classList.remove("hidden");
    }
  }

  async undo(): Promise<void> {
    if (!this.sessionId || this.busy) return;
    this.busy = true;
    const work = (async () => {
      try {
        this.apply(await this.api.undo(this.sessionId!));
      } catch (error) {
        if (!(error instanceof ApiError && error.status === 409)) throw error;
      } finally {
        this.busy = false;
      }
    })();
    this.inflight = work;
    return work;
  }

  async autoPlay(steps = 1000): Promise<void> {
    if (!this.sessionId || this.busy) return;
    this.busy = true;
    const work = (async () => {
      try {
        this.apply(await this.api.autoPlay(this.sessionId!, "lowest", steps));
      } finally {
        this.busy = false;
      }
    })();
    this.inflight = work;
    return work;
  }
}

/** Wire the controller to the static page and the session form. */
export function mountApp(
  document: Document,
  api = new SessionApi(),
): BoardController {
  const $ = (id: string) => document.getElementById(id)!;
  const controller = new BoardController(api, {
    board: $("board") as unknown as SVGSVGElement,
    word: $("word"),
    tableau: $("tableau"),
    whatif: $("whatif"),
    status: $("status"),
    banner: $("banner"),
    undo: $("undo") as HTMLButtonElement,
    auto: $("auto") as HTMLButtonElement,
  });
  const form = $("session-form") as HTMLFormElement;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const label = ($("diagram-label") as HTMLInputElement).value.trim();
    const activeText = ($("active-set") as HTMLInputElement).value.trim();
    const active = activeText
      ? activeText.split(",").map((s) => Number(s.trim()))
      : [];
    void controller.start({ diagram: { label }, active });
  });
  return controller;
}
