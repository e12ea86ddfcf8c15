/** Vertex coordinates for the board: fixed shapes for catalog families,
 * seeded force relaxation for anything else. */

import { BoardShape } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

const STEP = 90;

/** Deterministic layout; catalog labels get their familiar drawings. */
export function layoutVertices(
  shape: BoardShape,
  label: string | undefined,
): Point[] {
  const family = label?.[0]?.toUpperCase();
  const n = shape.n;
  if (family === "D" && n >= 4) {
    // spine 1..n-2 with the fork n-1 (up) and n (down) on the last node
    const points: Point[] = [];
    for (let i = 0; i < n - 2; i++) points.push({ x: (i + 1) * STEP, y: 120 });
    points.push({ x: (n - 2) * STEP + STEP * 0.8, y: 60 });
    points.push({ x: (n - 2) * STEP + STEP * 0.8, y: 180 });
    return points;
  }
  if (family === "E" && n >= 6) {
    // spine 1,3,4,...,n along the row, vertex 2 hanging under vertex 4
    const spine = [1, 3, 4, 5, 6, 7, 8].slice(0, n - 1);
    const points: Point[] = Array.from({ length: n }, () => ({ x: 0, y: 0 }));
    spine.forEach((vertex, i) => {
      points[vertex - 1] = { x: (i + 1) * STEP, y: 100 };
    });
    points[1] = { x: 3 * STEP, y: 200 };
    return points;
  }
  if (family && isPath(shape)) {
    return Array.from({ length: n }, (_, i) => ({
      x: (i + 1) * STEP,
      y: 120,
    }));
  }
  return forceLayout(shape, 0xc0ffee);
}

function isPath(shape: BoardShape): boolean {
  for (let u = 1; u <= shape.n; u++) {
    for (let v = u + 1; v <= shape.n; v++) {
      const adjacent = shape.arrows[v - 1]![u - 1]! > 0;
      if (adjacent !== (v === u + 1)) return false;
    }
  }
  return true;
}

function mulberry(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/** Spring relaxation with a fixed seed; identical inputs give identical boards. */
export function forceLayout(shape: BoardShape, seed: number): Point[] {
  const n = shape.n;
  const rand = mulberry(seed);
  const points: Point[] = Array.from({ length: n }, (_, i) => {
    const angle = (2 * Math.PI * i) / n + rand() * 0.1;
    return {
      x: 200 + 120 * Math.cos(angle),
      y: 150 + 120 * Math.sin(angle),
    };
  });
  const ideal = STEP;
  for (let iter = 0; iter < 200; iter++) {
    const force: Point[] = points.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = 0; j < n; j++) {
        if (i === j) continue;
        const dx = points[j]!.x - points[i]!.x;
        const dy = points[j]!.y - points[i]!.y;
        const dist = Math.max(Math.hypot(dx, dy), 1);
        const adjacent = shape.arrows[j]![i]! > 0;
        const pull = adjacent ? (dist - ideal) / dist : 0;
        const push = (-ideal * ideal) / (dist * dist * dist);
        force[i]!.x += dx * (0.02 * pull + 0.6 * push);
        force[i]!.y += dy * (0.02 * pull + 0.6 * push);
      }
    }
    for (let i = 0; i < n; i++) {
      points[i]!.x += Math.max(-8, Math.min(8, force[i]!.x));
      points[i]!.y += Math.max(-8, Math.min(8, force[i]!.y));
    }
  }
  // normalize into the viewbox
  const minX = Math.min(...points.map((p) => p.x));
  const minY = Math.min(...points.map((p) => p.y));
  return points.map((p) => ({
    x: p.x - minX + STEP / 2,
    y: p.y - minY + STEP / 2,
  }));
}
