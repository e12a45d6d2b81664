/** Radial tree layout that preserves the clockwise cyclic orders.
 *
 * The root sits at the centroid (minimal eccentricity, ties by id).  Every
 * subtree receives an angular sector proportional to its leaf count; a
 * vertex's outgoing edges take consecutive subsectors in cyclic order
 * starting after the edge to its parent.  In SVG coordinates (y pointing
 * down) increasing angle is clockwise on screen, so sorting the incident
 * edge directions by angle recovers each cyclic list.
 */

import type { TreeData } from "./api";

export interface Point {
  x: number;
  y: number;
}

export interface TreeLayout {
  root: string;
  positions: Map<string, Point>;
}

interface Adjacency {
  /** vertex id -> cyclic list of [edge, neighbour id] pairs */
  around: Map<string, [number, string][]>;
}

function adjacency(tree: TreeData): Adjacency {
  const endpoints = new Map<number, string[]>();
  for (const v of tree.vertices) {
    for (const e of v.cyclic) {
      const ends = endpoints.get(e) ?? [];
      ends.push(v.id);
      endpoints.set(e, ends);
    }
  }
  const around = new Map<string, [number, string][]>();
  for (const v of tree.vertices) {
    around.set(
      v.id,
      v.cyclic.map((e) => {
        const ends = endpoints.get(e)!;
        const other = ends[0] === v.id ? ends[1] : ends[0];
        return [e, other] as [number, string];
      }),
    );
  }
  return { around };
}

export function centroidVertex(tree: TreeData): string {
  const { around } = adjacency(tree);
  const ids = tree.vertices.map((v) => v.id).sort();
  let best = ids[0];
  let bestEcc = Infinity;
  for (const start of ids) {
    const dist = new Map<string, number>([[start, 0]]);
    const queue = [start];
    let ecc = 0;
    while (queue.length) {
      const cur = queue.shift()!;
      for (const [, next] of around.get(cur)!) {
        if (!dist.has(next)) {
          dist.set(next, dist.get(cur)! + 1);
          ecc = Math.max(ecc, dist.get(next)!);
          queue.push(next);
        }
      }
    }
    if (ecc < bestEcc) {
      bestEcc = ecc;
      best = start;
    }
  }
  return best;
}

function leafWeight(
  around: Map<string, [number, string][]>,
  vid: string,
  parent: string | null,
): number {
  const children = around.get(vid)!.filter(([, w]) => w !== parent);
  if (children.length === 0) {
    return 1;
  }
  let total = 0;
  for (const [, w] of children) {
    total += leafWeight(around, w, vid);
  }
  return total;
}

export function radialLayout(tree: TreeData, radius = 90): TreeLayout {
  const { around } = adjacency(tree);
  const root = centroidVertex(tree);
  const positions = new Map<string, Point>([[root, { x: 0, y: 0 }]]);

  const place = (
    vid: string,
    parent: string | null,
    parentEdge: number | null,
    sectorStart: number,
    sectorEnd: number,
    depth: number,
  ): void => {
    const cyc = around.get(vid)!;
    let ordered: [number, string][];
    if (parentEdge === null) {
      ordered = cyc;
    } else {
      const k = cyc.findIndex(([e]) => e === parentEdge);
      ordered = [...cyc.slice(k + 1), ...cyc.slice(0, k)];
    }
    const weights = ordered.map(([, w]) => leafWeight(around, w, vid));
    const total = weights.reduce((a, b) => a + b, 0);
    if (total === 0) {
      return;
    }
    const here = positions.get(vid)!;
    let angle = sectorStart;
    ordered.forEach(([edge, w], k) => {
      const span = ((sectorEnd - sectorStart) * weights[k]) / total;
      const mid = angle + span / 2;
      positions.set(w, {
        x: here.x + radius * Math.cos(mid),
        y: here.y + radius * Math.sin(mid),
      });
      place(w, vid, edge, angle, angle + span, depth + 1);
      angle += span;
    });
  };

  place(root, null, null, -Math.PI / 2, (3 * Math.PI) / 2, 0);
  return { root, positions };
}

/** Screen-clockwise angle of the direction from one point to another. */
export function edgeAngle(from: Point, to: Point): number {
  const a = Math.atan2(to.y - from.y, to.x - from.x);
  return a < 0 ? a + 2 * Math.PI : a;
}

/** Read back each vertex's cyclic list from the laid-out edge directions,
 * rotated to start at the smallest edge; the rendering test compares this
 * to the served cyclic data. */
export function extractCyclicFromAngles(
  tree: TreeData,
  layout: TreeLayout,
): Map<string, number[]> {
  const { around } = adjacency(tree);
  const out = new Map<string, number[]>();
  for (const v of tree.vertices) {
    const here = layout.positions.get(v.id)!;
    const angled = around
      .get(v.id)!
      .map(([e, w]) => ({ e, angle: edgeAngle(here, layout.positions.get(w)!) }))
      .sort((a, b) => a.angle - b.angle)
      .map(({ e }) => e);
    const k = angled.indexOf(Math.min(...angled));
    out.set(v.id, [...angled.slice(k), ...angled.slice(0, k)]);
  }
  return out;
}

/** Rotation-insensitive equality of cyclic lists. */
export function sameCyclicOrder(a: number[], b: number[]): boolean {
  if (a.length !== b.length) {
    return false;
  }
  if (a.length === 0) {
    return true;
  }
  const k = b.indexOf(a[0]);
  if (k < 0) {
    return false;
  }
  return a.every((x, i) => x === b[(k + i) % b.length]);
}
