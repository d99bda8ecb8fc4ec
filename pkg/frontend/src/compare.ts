// Plan-pair comparison: pure set operations over the offered-feature lists
// the server already provides. No objective values are recomputed here.

import type { PlanPayload } from "./types.js";

export function symmetricDiff(a: number[], b: number[]): number[] {
  const setA = new Set(a);
  const setB = new Set(b);
  const out: number[] = [];
  for (const id of setA) if (!setB.has(id)) out.push(id);
  for (const id of setB) if (!setA.has(id)) out.push(id);
  return out.sort((x, y) => x - y);
}

export function sharedFeatures(lists: number[][]): number[] {
  if (lists.length === 0) return [];
  let core = new Set(lists[0]);
  for (const list of lists.slice(1)) {
    const next = new Set(list);
    core = new Set([...core].filter((id) => next.has(id)));
  }
  return [...core].sort((x, y) => x - y);
}

export interface PlanComparison {
  onlyA: number[];
  onlyB: number[];
  diff: number[];
  shared: number[];
}

export function comparePlans(a: PlanPayload, b: PlanPayload): PlanComparison {
  const setB = new Set(b.features);
  const setA = new Set(a.features);
  return {
    onlyA: a.features.filter((id) => !setB.has(id)).sort((x, y) => x - y),
    onlyB: b.features.filter((id) => !setA.has(id)).sort((x, y) => x - y),
    diff: symmetricDiff(a.features, b.features),
    shared: sharedFeatures([a.features, b.features]),
  };
}
