// @vitest-environment jsdom
import { describe, expect, it } from "vitest";

import { renderBoard, validateStateView } from "../src/board.js";
import { resolveShape } from "../src/firing.js";
import { layoutVertices } from "../src/layout.js";
import { StateView } from "../src/types.js";

function svgRoot(): SVGSVGElement {
  return document.createElementNS(
    "http://www.w3.org/2000/svg",
    "svg",
  ) as SVGSVGElement;
}

const A3_STATE: StateView = {
  chips: [0, 0, 0],
  states: ["happy", "sad", "happy"],
  word: [],
  element_length: 0,
  terminal: false,
  tableau: { shape: [], rows: [] },
};

describe("renderBoard", () => {
  it("marks moods and sources, and only sad vertices look clickable", () => {
    const shape = resolveShape({ label: "A3" }, [2]);
    const root = svgRoot();
    renderBoard(root, shape, layoutVertices(shape, "A3"), A3_STATE, {
      onFire: () => {},
    });
    const groups = root.querySelectorAll("g.vertex");
    expect(groups).toHaveLength(3);
    expect(groups[1]!.classList.contains("sad")).toBe(true);
    expect(groups[1]!.classList.contains("source")).toBe(true);
    expect(groups[0]!.classList.contains("happy")).toBe(true);
    expect(groups[0]!.classList.contains("source")).toBe(false);
  });

  it("click on a vertex reports its number", () => {
    const shape = resolveShape({ label: "A3" }, [2]);
    const root = svgRoot();
    const fired: number[] = [];
    renderBoard(root, shape, layoutVertices(shape, "A3"), A3_STATE, {
      onFire: (v) => fired.push(v),
    });
    root
      .querySelector('g[data-vertex="2"]')!
      .dispatchEvent(new window.Event("click"));
    expect(fired).toEqual([2]);
  });

  it("shows chip counts as text", () => {
    const shape = resolveShape({ label: "A3" }, [2]);
    const root = svgRoot();
    renderBoard(
      root,
      shape,
      layoutVertices(shape, "A3"),
      { ...A3_STATE, chips: [1, 2, 1] },
      { onFire: () => {} },
    );
    const texts = [...root.querySelectorAll("text.chips")].map(
      (t) => t.textContent,
    );
    expect(texts).toEqual(["1", "2", "1"]);
  });

  it("draws parallel lines and a direction marker for a double edge", () => {
    const shape = resolveShape({ label: "F4" }, []);
    const root = svgRoot();
    renderBoard(
      root,
      shape,
      layoutVertices(shape, "F4"),
      {
        chips: [0, 0, 0, 0],
        states: ["happy", "happy", "happy", "happy"],
        word: [],
        element_length: 0,
        terminal: true,
      },
      { onFire: () => {} },
    );
    // three edges: 1-2 single, 2=>3 double (two lines), 3-4 single
    expect(root.querySelectorAll("line.edge")).toHaveLength(4);
    expect(root.querySelectorAll("line.edge-direction")).toHaveLength(1);
  });
});

describe("validateStateView", () => {
  it("accepts a well-formed view", () => {
    expect(validateStateView(A3_STATE, 3)).toBeNull();
  });

  it("rejects wrong lengths and bad moods", () => {
    expect(validateStateView({ ...A3_STATE, chips: [0, 0] }, 3)).toMatch(
      /chip counts/,
    );
    expect(
      validateStateView(
        { ...A3_STATE, states: ["sad", "bored", "happy"] as never },
        3,
      ),
    ).toMatch(/mood/);
    expect(
      validateStateView({ ...A3_STATE, chips: [0, -1, 0] }, 3),
    ).toMatch(/non-negative/);
  });
});
