/** Piece geometry: a radially cut pizza wheel for cycles, a row of tiles for
 * everything else. Angular spans are proportional to |weight|, with a fixed
 * minimum span so zero-weight pieces stay visible and clickable. */

import type { BoardJson, VertexJson, Weight } from "./api.js";
import { weightToFraction } from "./api.js";

export interface Sector {
  id: number;
  weight: Weight;
  /** fraction of the full turn where the sector starts / ends, in [0, 1] */
  start: number;
  end: number;
  path: string; // SVG path for the filled sector
  labelX: number;
  labelY: number;
}

export interface Tile {
  id: number;
  weight: Weight;
  x: number; // left edge in layout units
  width: number;
}

/** Minimum share of the circle for any piece (before normalization). */
export const MIN_SHARE = 0.03;

function absShare(w: Weight): number {
  const [p, q] = weightToFraction(w);
  const abs = p < 0n ? -p : p;
  return Number(abs) / Number(q);
}

/** Angular shares per piece: proportional to |weight|, floored at a minimum,
 * renormalized to sum to 1. */
export function wheelShares(vertices: VertexJson[]): number[] {
  const n = vertices.length;
  if (n === 0) return [];
  const raw = vertices.map((v) => absShare(v.weight));
  const total = raw.reduce((a, b) => a + b, 0);
  const shares = raw.map((r) =>
    total > 0 ? Math.max(MIN_SHARE, r / total) : 1 / n,
  );
  const sum = shares.reduce((a, b) => a + b, 0);
  return shares.map((s) => s / sum);
}

const TAU = 2 * Math.PI;

function point(cx: number, cy: number, r: number, turn: number): [number, number] {
  // start at 12 o'clock, clockwise
  const a = turn * TAU - Math.PI / 2;
  return [cx + r * Math.cos(a), cy + r * Math.sin(a)];
}

export function wheelSectors(
  vertices: VertexJson[],
  cx = 200,
  cy = 200,
  r = 180,
): Sector[] {
  const shares = wheelShares(vertices);
  const sectors: Sector[] = [];
  let at = 0;
  vertices.forEach((v, i) => {
    const start = at;
    const end = at + shares[i];
    at = end;
    const [x1, y1] = point(cx, cy, r, start);
    const [x2, y2] = point(cx, cy, r, end);
    const large = end - start > 0.5 ? 1 : 0;
    const path =
      vertices.length === 1
        ? `M ${cx} ${cy - r} A ${r} ${r} 0 1 1 ${cx - 0.01} ${cy - r} Z`
        : `M ${cx} ${cy} L ${x1} ${y1} A ${r} ${r} 0 ${large} 1 ${x2} ${y2} Z`;
    const [labelX, labelY] = point(cx, cy, r * 0.65, (start + end) / 2);
    sectors.push({ id: v.id, weight: v.weight, start, end, path, labelX, labelY });
  });
  return sectors;
}

/** Row layout for paths, stacks, and two-ended stacks: equal-width tiles in
 * board order (vertex ids are assigned along the row by the server). */
export function rowTiles(vertices: VertexJson[], tileWidth = 72): Tile[] {
  const ordered = [...vertices].sort((a, b) => a.id - b.id);
  return ordered.map((v, i) => ({
    id: v.id,
    weight: v.weight,
    x: i * tileWidth,
    width: tileWidth,
  }));
}

/** A board renders as a wheel iff its (initial) graph is a single cycle. */
export function isWheel(board: BoardJson): boolean {
  const n = board.vertices.length;
  if (n < 3 || board.edges.length !== n) return false;
  const deg = new Map<number, number>();
  for (const [a, b] of board.edges) {
    deg.set(a, (deg.get(a) ?? 0) + 1);
    deg.set(b, (deg.get(b) ?? 0) + 1);
  }
  return board.vertices.every((v) => deg.get(v.id) === 2);
}
