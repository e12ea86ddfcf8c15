/** Word strip, tableau pane and what-if list, all rendered from StateView. */

import { whatIfOptions } from "./firing.js";
import { BoardShape, StateView, TableauView } from "./types.js";

/** The word strip shows moves in play order: s2 s1 s3 s2. */
export function renderWordStrip(element: HTMLElement, word: number[]): void {
  element.replaceChildren();
  if (word.length === 0) {
    const empty = document.createElement("span");
    empty.className = "word-empty";
    empty.textContent = "(empty word)";
    element.appendChild(empty);
    return;
  }
  for (const letter of word) {
    const chip = document.createElement("span");
    chip.className = "letter";
    chip.textContent = `s${letter}`;
    element.appendChild(chip);
  }
}

export function renderTableau(
  element: HTMLElement,
  tableau: TableauView | undefined,
): void {
  element.replaceChildren();
  if (!tableau) {
    element.classList.add("hidden");
    return;
  }
  element.classList.remove("hidden");
  const table = document.createElement("table");
  table.className = "tableau";
  for (const row of tableau.rows) {
    const tr = document.createElement("tr");
    for (const value of row) {
      const td = document.createElement("td");
      td.textContent = String(value);
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
  element.appendChild(table);
}

/**
 * Advisory previews for each legal move, computed client-side from the
 * firing rule. Selection still goes through the server, which is the
 * authority; diverging previews would be caught there.
 */
export function renderWhatIf(
  element: HTMLElement,
  shape: BoardShape,
  state: StateView,
  onPick: (vertex: number) => void,
): void {
  element.replaceChildren();
  if (state.terminal) {
    return;
  }
  for (const option of whatIfOptions(shape, state.chips)) {
    const button = document.createElement("button");
    button.className = "whatif-option";
    button.dataset.vertex = String(option.vertex);
    button.textContent = `fire ${option.vertex} -> (${option.result.join(", ")})  +${option.gain}`;
    button.addEventListener("click", () => onPick(option.vertex));
    element.appendChild(button);
  }
}

export function renderStatus(element: HTMLElement, state: StateView): void {
  if (state.terminal) {
    element.textContent = `game over — final word ${
      state.word.map((l) => `s${l}`).join("") || "(empty)"
    }`;
    element.className = "status terminal";
  } else if (state.diverging) {
    element.textContent = "step budget exhausted; the game looks divergent";
    element.className = "status diverging";
  } else {
    element.textContent = `${state.word.length} moves so far`;
    element.className = "status";
  }
}
