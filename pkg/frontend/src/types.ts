// Payload shapes mirroring the service JSON exactly. Numbers are kept as
// parsed; the client never recomputes or rounds objective values.

export interface PlanPayload {
  id: number;
  assignment: number[];
  feature_ids: number[];
  features: number[];
  total_satisfaction: number;
  total_dissatisfaction: number;
  effort_used: number[];
  stability?: [number, number][];
}

export interface ParetoPayload {
  type: "pareto_result";
  plans: PlanPayload[];
  alpha_grid: number[];
}

export interface SolveReportPayload {
  type: "solve_report";
  alpha: number;
  objective: number;
  nodes_explored: number;
  proven_optimal: boolean;
  plan: PlanPayload;
}

export interface KanoProfilePayload {
  a: number;
  o: number;
  m: number;
  i: number;
  r: number;
  q: number;
}

export interface FeatureRowPayload {
  id: number;
  name: string;
  effort: number;
  sat: number;
  dissat: number;
  kano: KanoProfilePayload | null;
}

export interface FeatureValuesPayload {
  type: "feature_values";
  features: FeatureRowPayload[];
}

export interface ClassificationPayload {
  type: "classification";
  dominated: number;
  identical: number;
  new_pareto: number;
  plans: (PlanPayload & { heuristic: string; label: string })[];
}

export interface BaselinesPayload {
  type: "baselines";
  classification: ClassificationPayload;
  random: unknown | null;
}

export interface SolveRequest {
  capacities?: number[];
  sat_discounts?: number[];
  dissat_discounts?: number[];
  step?: number;
}

export interface WhatifRequest {
  capacities?: number[];
  alpha?: number;
  stakeholder_weight_overrides?: Record<string, number>;
}
