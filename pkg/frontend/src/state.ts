// Session state and the latest-wins guard for in-flight what-if requests.
// Every view is derived from the last server responses kept here; the client
// never computes objective values of its own.

import type { FeatureValuesPayload, ParetoPayload, SolveReportPayload } from "./types.js";

export interface SessionState {
  datasetId: string | null;
  capacities: number[];
  step: number;
  features: FeatureValuesPayload | null;
  result: ParetoPayload | null;
  whatif: SolveReportPayload | null;
  selection: number[]; // up to two plan indices for comparison
  highlight: number; // plan index matched by the latest what-if, or -1
}

export function initialState(): SessionState {
  return {
    datasetId: null,
    capacities: [],
    step: 0.001,
    features: null,
    result: null,
    whatif: null,
    selection: [],
    highlight: -1,
  };
}

export function toggleSelection(state: SessionState, planIndex: number): SessionState {
  let selection: number[];
  if (state.selection.includes(planIndex)) {
    selection = state.selection.filter((i) => i !== planIndex);
  } else {
    selection = [...state.selection, planIndex].slice(-2);
  }
  return { ...state, selection };
}

/**
 * Serializes overlapping async requests: each new issue() aborts the previous
 * request, and a response is applied only if no newer request started since.
 */
export class LatestWins {
  private seq = 0;
  private controller: AbortController | null = null;

  issue(): { signal: AbortSignal; token: number } {
    this.controller?.abort();
    this.controller = new AbortController();
    this.seq += 1;
    return { signal: this.controller.signal, token: this.seq };
  }

  isCurrent(token: number): boolean {
    return token === this.seq;
  }
}
