/** SVG board: vertices with chip counts and moods, directed multi-edges. */

import { Point } from "./layout.js";
import { BoardShape, StateView } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const RADIUS = 22;

export interface BoardCallbacks {
  onFire: (vertex: number) => void;
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

export function validateStateView(state: StateView, n: number): string | null {
  if (!Array.isArray(state.chips) || state.chips.length !== n) {
    return "state has the wrong number of chip counts";
  }
  if (!Array.isArray(state.states) || state.states.length !== n) {
    return "state has the wrong number of vertex moods";
  }
  if (state.chips.some((c) => !Number.isInteger(c) || c < 0)) {
    return "chip counts must be non-negative integers";
  }
  if (state.states.some((s) => !["sad", "happy", "excited"].includes(s))) {
    return "unknown vertex mood";
  }
  return null;
}

/**
 * Redraws the board into `root` from the latest server state. Sad vertices
 * are clickable; everything else is inert. Never invents state: the chips
 * and moods shown are exactly the StateView's.
 */
export function renderBoard(
  root: SVGSVGElement,
  shape: BoardShape,
  points: Point[],
  state: StateView,
  callbacks: BoardCallbacks,
): void {
  root.replaceChildren();
  const defs = svgEl("defs", {});
  const marker = svgEl("marker", {
    id: "arrowhead",
    markerWidth: "8",
    markerHeight: "8",
    refX: "7",
    refY: "4",
    orient: "auto",
  });
  marker.appendChild(svgEl("path", { d: "M0,0 L8,4 L0,8 z", fill: "#444" }));
  defs.appendChild(marker);
  root.appendChild(defs);

  for (let u = 1; u <= shape.n; u++) {
    for (let v = u + 1; v <= shape.n; v++) {
      const into_v = shape.arrows[v - 1]![u - 1]!;
      const into_u = shape.arrows[u - 1]![v - 1]!;
      if (into_v === 0 && into_u === 0) continue;
      drawEdge(root, points[u - 1]!, points[v - 1]!, into_v, into_u);
    }
  }

  for (let v = 1; v <= shape.n; v++) {
    const p = points[v - 1]!;
    const moodName = state.states[v - 1]!;
    const group = svgEl("g", {
      class: `vertex ${moodName}${shape.active.has(v) ? " source" : ""}`,
      "data-vertex": String(v),
      "data-mood": moodName,
      transform: `translate(${p.x}, ${p.y})`,
    });
    group.appendChild(
      svgEl("circle", { r: String(RADIUS), class: "vertex-circle" }),
    );
    const chips = svgEl("text", {
      class: "chips",
      "text-anchor": "middle",
      dy: "0.35em",
    });
    chips.textContent = String(state.chips[v - 1]);
    group.appendChild(chips);
    const index = svgEl("text", {
      class: "vertex-index",
      "text-anchor": "middle",
      y: String(RADIUS + 16),
    });
    index.textContent = `v${v}`;
    group.appendChild(index);
    group.addEventListener("click", () => callbacks.onFire(v));
    root.appendChild(group);
  }
}

/** Multiplicity > 1 draws parallel lines plus an arrowhead long-to-short. */
function drawEdge(
  root: SVGSVGElement,
  a: Point,
  b: Point,
  intoB: number,
  intoA: number,
): void {
  const count = Math.max(intoB, intoA, 1);
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const len = Math.max(Math.hypot(dx, dy), 1);
  const nx = -dy / len;
  const ny = dx / len;
  const trimAx = a.x + (dx / len) * RADIUS;
  const trimAy = a.y + (dy / len) * RADIUS;
  const trimBx = b.x - (dx / len) * RADIUS;
  const trimBy = b.y - (dy / len) * RADIUS;
  for (let k = 0; k < count; k++) {
    const offset = (k - (count - 1) / 2) * 5;
    const line = svgEl("line", {
      x1: String(trimAx + nx * offset),
      y1: String(trimAy + ny * offset),
      x2: String(trimBx + nx * offset),
      y2: String(trimBy + ny * offset),
      class: "edge",
    });
    root.appendChild(line);
  }
  if (count > 1) {
    // direction marker at the midpoint, pointing toward the short root
    const toB = intoB > intoA;
    const mx = (trimAx + trimBx) / 2;
    const my = (trimAy + trimBy) / 2;
    const sx = toB ? mx - (dx / len) * 10 : mx + (dx / len) * 10;
    const sy = toB ? my - (dy / len) * 10 : my + (dy / len) * 10;
    const ex = toB ? mx + (dx / len) * 10 : mx - (dx / len) * 10;
    const ey = toB ? my + (dy / len) * 10 : my - (dy / len) * 10;
    const arrow = svgEl("line", {
      x1: String(sx),
      y1: String(sy),
      x2: String(ex),
      y2: String(ey),
      class: "edge-direction",
      "marker-end": "url(#arrowhead)",
    });
    root.appendChild(arrow);
  }
}
