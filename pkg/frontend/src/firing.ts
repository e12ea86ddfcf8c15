/**
 * Client-side copy of the firing rule, for advisory previews only.
 *
 * The what-if panel uses it to show where each sad vertex would lead; the
 * server remains the authority and re-validates every actual move.
 */

import { BoardShape, DiagramSpec, Mood } from "./types.js";

export function resolveShape(
  spec: DiagramSpec,
  active: number[] | undefined,
): BoardShape {
  const catalog = spec.label && !spec.edges ? catalogEdges(spec.label) : null;
  const n = catalog ? catalog.n : spec.n ?? 0;
  if (n < 1) throw new Error("diagram needs a positive vertex count");
  const arrows: number[][] = Array.from({ length: n }, () =>
    Array.from({ length: n }, () => 0),
  );
  const records = catalog ? catalog.edges : (spec.edges ?? []);
  for (const edge of records) {
    const m = edge.arrows ?? 1;
    arrows[edge.to - 1]![edge.from - 1] = m;
  }
  // an omitted reverse direction defaults to a single arrow back
  for (let u = 0; u < n; u++) {
    for (let v = 0; v < n; v++) {
      if (arrows[v]![u]! > 0 && arrows[u]![v] === 0) arrows[u]![v] = 1;
    }
  }
  return { n, arrows, active: new Set(active ?? []) };
}

interface CatalogShape {
  n: number;
  edges: { from: number; to: number; arrows?: number }[];
}

function catalogEdges(label: string): CatalogShape {
  const family = label[0]!.toUpperCase();
  const rank = Number(label.slice(1));
  if (!Number.isInteger(rank) || rank < 1) {
    throw new Error(`cannot parse catalog label ${label}`);
  }
  const chain = (upto: number) =>
    Array.from({ length: upto - 1 }, (_, i) => ({ from: i + 1, to: i + 2 }));
  switch (family) {
    case "A":
      return { n: rank, edges: chain(rank) };
    case "B":
      return {
        n: rank,
        edges: [...chain(rank - 1), { from: rank - 1, to: rank, arrows: 2 }],
      };
    case "C":
      return {
        n: rank,
        edges: [...chain(rank - 1), { from: rank, to: rank - 1, arrows: 2 }],
      };
    case "D":
      return {
        n: rank,
        edges: [...chain(rank - 1), { from: rank - 2, to: rank }],
      };
    case "E": {
      const spine = [1, 3, 4, 5, 6, 7, 8].slice(0, rank - 1);
      const edges = spine.slice(0, -1).map((a, i) => ({
        from: a,
        to: spine[i + 1]!,
      }));
      edges.push({ from: 2, to: 4 });
      return { n: rank, edges };
    }
    case "F":
      return {
        n: 4,
        edges: [
          { from: 1, to: 2 },
          { from: 2, to: 3, arrows: 2 },
          { from: 3, to: 4 },
        ],
      };
    case "G":
      return { n: 2, edges: [{ from: 2, to: 1, arrows: 3 }] };
    default:
      throw new Error(`unknown family ${family}`);
  }
}

function weightedNeighborSum(
  shape: BoardShape,
  chips: number[],
  v: number,
): number {
  let sum = 0;
  for (let u = 1; u <= shape.n; u++) {
    sum += shape.arrows[v - 1]![u - 1]! * chips[u - 1]!;
  }
  return sum;
}

export function mood(shape: BoardShape, chips: number[], v: number): Mood {
  const lhs = 2 * chips[v - 1]!;
  const rhs = weightedNeighborSum(shape, chips, v) + (shape.active.has(v) ? 1 : 0);
  if (lhs < rhs) return "sad";
  if (lhs === rhs) return "happy";
  return "excited";
}

/** Configuration after firing `v`, assuming `v` is sad; advisory only. */
export function firePreview(
  shape: BoardShape,
  chips: number[],
  v: number,
): number[] {
  const next = chips.slice();
  next[v - 1] =
    weightedNeighborSum(shape, chips, v) +
    (shape.active.has(v) ? 1 : 0) -
    chips[v - 1]!;
  return next;
}

export interface WhatIf {
  vertex: number;
  result: number[];
  gain: number;
}

/** One advisory entry per sad vertex of the current configuration. */
export function whatIfOptions(shape: BoardShape, chips: number[]): WhatIf[] {
  const options: WhatIf[] = [];
  for (let v = 1; v <= shape.n; v++) {
    if (mood(shape, chips, v) === "sad") {
      const result = firePreview(shape, chips, v);
      options.push({
        vertex: v,
        result,
        gain: result[v - 1]! - chips[v - 1]!,
      });
    }
  }
  return options;
}
