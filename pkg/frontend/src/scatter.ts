// Trade-off scatter view model and SVG rendering. Satisfaction runs along x,
// dissatisfaction along y. Data values are carried through verbatim; only
// pixel positions are computed here.

import type { PlanPayload } from "./types.js";

export interface ScatterPoint {
  planIndex: number;
  ts: number;
  tds: number;
  x: number;
  y: number;
  label: string;
  stability: [number, number][];
}

export interface ScatterLayout {
  points: ScatterPoint[];
  width: number;
  height: number;
  pad: number;
}

function scale(value: number, lo: number, hi: number, outLo: number, outHi: number): number {
  if (hi === lo) return (outLo + outHi) / 2;
  return outLo + ((value - lo) / (hi - lo)) * (outHi - outLo);
}

export function layoutScatter(
  plans: PlanPayload[],
  width = 520,
  height = 420,
  pad = 48,
): ScatterLayout {
  const ts = plans.map((p) => p.total_satisfaction);
  const tds = plans.map((p) => p.total_dissatisfaction);
  const tsLo = Math.min(...ts, 0);
  const tsHi = Math.max(...ts, 1);
  const tdsLo = Math.min(...tds, 0);
  const tdsHi = Math.max(...tds, 1);
  const points = plans.map((plan, planIndex) => ({
    planIndex,
    ts: plan.total_satisfaction,
    tds: plan.total_dissatisfaction,
    x: scale(plan.total_satisfaction, tsLo, tsHi, pad, width - pad),
    // higher dissatisfaction plots higher on the screen-y axis (inverted SVG y)
    y: scale(plan.total_dissatisfaction, tdsLo, tdsHi, height - pad, pad),
    label: `P${planIndex + 1}`,
    stability: plan.stability ?? [],
  }));
  return { points, width, height, pad };
}

export function stabilityTooltip(point: ScatterPoint): string {
  if (point.stability.length === 0) {
    return `${point.label}: TS ${point.ts}, TDS ${point.tds}`;
  }
  const spans = point.stability.map(([lo, hi]) => `[${lo}, ${hi}]`).join(" + ");
  return `${point.label}: TS ${point.ts}, TDS ${point.tds}, stable for alpha in ${spans}`;
}

/** Index of the scatter plan matching a solved assignment, or -1. */
export function findPlanIndexByAssignment(plans: PlanPayload[], assignment: number[]): number {
  return plans.findIndex(
    (p) =>
      p.assignment.length === assignment.length &&
      p.assignment.every((v, i) => v === assignment[i]),
  );
}

export function renderScatter(
  layout: ScatterLayout,
  selected: number[] = [],
  highlight = -1,
): string {
  const { width, height, pad } = layout;
  const axes =
    `<line x1="${pad}" y1="${height - pad}" x2="${width - pad}" y2="${height - pad}" class="axis"/>` +
    `<line x1="${pad}" y1="${pad}" x2="${pad}" y2="${height - pad}" class="axis"/>` +
    `<text x="${width / 2}" y="${height - 10}" class="axis-label">total satisfaction</text>` +
    `<text x="14" y="${height / 2}" class="axis-label" transform="rotate(-90 14 ${height / 2})">total dissatisfaction</text>`;
  const dots = layout.points
    .map((p) => {
      const classes = ["dot"];
      if (selected.includes(p.planIndex)) classes.push("selected");
      if (p.planIndex === highlight) classes.push("highlight");
      return (
        `<g class="${classes.join(" ")}" data-plan="${p.planIndex}" data-ts="${p.ts}" data-tds="${p.tds}">` +
        `<circle cx="${p.x}" cy="${p.y}" r="7"><title>${stabilityTooltip(p)}</title></circle>` +
        `<text x="${p.x + 10}" y="${p.y - 8}">${p.label}</text>` +
        `</g>`
      );
    })
    .join("");
  return `<svg viewBox="0 0 ${width} ${height}" role="img">${axes}${dots}</svg>`;
}
