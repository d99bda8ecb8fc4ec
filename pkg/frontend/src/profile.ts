// Feature profile view model: satisfaction/dissatisfaction bars plus the
// Kano attribute breakdown when the dataset was elicited that way.

import type { FeatureRowPayload } from "./types.js";

export interface ValueBar {
  id: number;
  name: string;
  sat: number;
  dissat: number;
  satPct: number;
  dissatPct: number;
}

export function valueBars(features: FeatureRowPayload[]): ValueBar[] {
  const max = Math.max(...features.map((f) => Math.max(f.sat, f.dissat)), 1e-9);
  return features.map((f) => ({
    id: f.id,
    name: f.name,
    sat: f.sat,
    dissat: f.dissat,
    satPct: (100 * f.sat) / max,
    dissatPct: (100 * f.dissat) / max,
  }));
}

const KANO_LABELS: [keyof NonNullable<FeatureRowPayload["kano"]>, string][] = [
  ["a", "attractive"],
  ["o", "one-dimensional"],
  ["m", "must-be"],
  ["i", "indifferent"],
  ["r", "reverse"],
  ["q", "questionable"],
];

export interface KanoSlice {
  key: string;
  label: string;
  value: number;
  pct: number;
}

export function kanoBreakdown(feature: FeatureRowPayload): KanoSlice[] | null {
  if (!feature.kano) return null;
  return KANO_LABELS.map(([key, label]) => ({
    key,
    label,
    value: feature.kano![key],
    pct: 100 * feature.kano![key],
  }));
}
