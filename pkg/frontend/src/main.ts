// DOM wiring for the explorer. All numbers rendered here come straight from
// service payloads; interaction handlers issue exactly one API call each.

import { ApiClient, ApiError } from "./api.js";
import { comparePlans } from "./compare.js";
import { kanoBreakdown, valueBars } from "./profile.js";
import { findPlanIndexByAssignment, layoutScatter, renderScatter, stabilityTooltip } from "./scatter.js";
import { initialState, LatestWins, SessionState, toggleSelection } from "./state.js";
import type { PlanPayload } from "./types.js";

const api = new ApiClient("");
const whatifGuard = new LatestWins();
let state: SessionState = initialState();
let uploadedDataset: any = null;

const $ = (id: string) => document.getElementById(id) as HTMLElement;
const input = (id: string) => document.getElementById(id) as HTMLInputElement;

function setStatus(message: string, isError = false) {
  const el = $("status");
  el.textContent = message;
  el.className = isError ? "status error" : "status";
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    const extra = err.errors.length ? ` — ${err.errors.join("; ")}` : "";
    return `${err.detail}${extra}`;
  }
  return String(err);
}

function planSummary(plan: PlanPayload): string {
  const features = plan.features.map((f) => `F${f}`).join(" ") || "(none)";
  const releases = plan.effort_used
    .map((e, i) => `release ${i + 1}: ${e}`)
    .join(", ");
  return (
    `<dl><dt>features</dt><dd>${features}</dd>` +
    `<dt>satisfaction</dt><dd>${plan.total_satisfaction}</dd>` +
    `<dt>dissatisfaction</dt><dd>${plan.total_dissatisfaction}</dd>` +
    `<dt>effort</dt><dd>${releases}</dd></dl>`
  );
}

function renderAll() {
  renderScatterPanel();
  renderDetailPanel();
  renderComparePanel();
  renderProfilePanel();
  renderWeightEditor();
}

function renderScatterPanel() {
  const host = $("scatter");
  if (!state.result) {
    host.innerHTML = "<p class='hint'>Upload a dataset and solve to see the trade-off front.</p>";
    return;
  }
  const layout = layoutScatter(state.result.plans);
  host.innerHTML = renderScatter(layout, state.selection, state.highlight);
  host.querySelectorAll("g.dot").forEach((g) => {
    g.addEventListener("click", () => {
      state = toggleSelection(state, Number((g as SVGGElement).dataset.plan));
      renderAll();
    });
  });
  const legend = state.result.plans
    .map((p, i) => {
      const tip = stabilityTooltip(layout.points[i]);
      const marks = [
        state.selection.includes(i) ? "selected" : "",
        i === state.highlight ? "what-if match" : "",
      ].filter(Boolean).join(", ");
      return `<li>${tip}${marks ? ` <em>(${marks})</em>` : ""}</li>`;
    })
    .join("");
  $("legend").innerHTML = `<ul>${legend}</ul>`;
}

function renderDetailPanel() {
  const host = $("detail");
  const parts: string[] = [];
  if (state.selection.length > 0 && state.result) {
    const idx = state.selection[state.selection.length - 1];
    parts.push(`<h3>Plan P${idx + 1}</h3>${planSummary(state.result.plans[idx])}`);
  }
  if (state.whatif) {
    parts.push(
      `<h3>What-if solve (alpha ${state.whatif.alpha})</h3>` +
        planSummary(state.whatif.plan) +
        `<p class='hint'>objective ${state.whatif.objective}, ` +
        `${state.whatif.nodes_explored} nodes, proven optimal</p>`,
    );
  }
  host.innerHTML = parts.join("") || "<p class='hint'>Click a point to inspect a plan.</p>";
}

function renderComparePanel() {
  const host = $("compare");
  if (!state.result || state.selection.length !== 2) {
    host.innerHTML = "<p class='hint'>Select two points to compare plans.</p>";
    return;
  }
  const [ia, ib] = state.selection;
  const cmp = comparePlans(state.result.plans[ia], state.result.plans[ib]);
  const fmt = (ids: number[]) => (ids.length ? ids.map((f) => `F${f}`).join(" ") : "(none)");
  host.innerHTML =
    `<h3>P${ia + 1} vs P${ib + 1}</h3>` +
    `<dl><dt>symmetric difference</dt><dd data-role="diff">${fmt(cmp.diff)}</dd>` +
    `<dt>only in P${ia + 1}</dt><dd>${fmt(cmp.onlyA)}</dd>` +
    `<dt>only in P${ib + 1}</dt><dd>${fmt(cmp.onlyB)}</dd>` +
    `<dt>shared core</dt><dd>${fmt(cmp.shared)}</dd></dl>`;
}

function renderProfilePanel() {
  const host = $("profile");
  if (!state.features) {
    host.innerHTML = "";
    return;
  }
  const bars = valueBars(state.features.features)
    .map((b) => {
      const row = state.features!.features.find((f) => f.id === b.id)!;
      const kano = kanoBreakdown(row);
      const kanoText = kano
        ? `<span class="kano">${kano.filter((s) => s.value > 0).map((s) => `${s.label} ${s.value}`).join(", ")}</span>`
        : "";
      return (
        `<div class="bar-row"><span class="bar-name">F${b.id} ${b.name}</span>` +
        `<div class="bar sat" style="width:${b.satPct}%" title="satisfaction ${b.sat}"></div>` +
        `<div class="bar dissat" style="width:${b.dissatPct}%" title="dissatisfaction ${b.dissat}"></div>` +
        `${kanoText}</div>`
      );
    })
    .join("");
  host.innerHTML = `<h3>Feature values</h3>${bars}`;
}

function renderWeightEditor() {
  const host = $("weights");
  const stakeholders: { id: number; weight: number }[] = uploadedDataset?.stakeholders ?? [];
  const precomputed = Boolean(uploadedDataset?.values?.precomputed);
  if (!state.datasetId || stakeholders.length === 0) {
    host.innerHTML = "";
    return;
  }
  if (precomputed) {
    host.innerHTML =
      "<h3>Stakeholder weights</h3><p class='hint'>This dataset carries precomputed values; weights cannot be re-applied.</p>";
    return;
  }
  const rows = stakeholders
    .map(
      (s) =>
        `<label>stakeholder ${s.id} <input type="number" min="0" max="9" step="1" value="${s.weight}" data-stakeholder="${s.id}"></label>`,
    )
    .join("");
  host.innerHTML = `<h3>Stakeholder weights</h3><div class="weights">${rows}</div>`;
  host.querySelectorAll("input[data-stakeholder]").forEach((el) => {
    el.addEventListener("change", () => void runWhatif());
  });
}

function weightOverrides(): Record<string, number> | undefined {
  const inputs = document.querySelectorAll<HTMLInputElement>("input[data-stakeholder]");
  if (inputs.length === 0) return undefined;
  const overrides: Record<string, number> = {};
  inputs.forEach((el) => {
    overrides[el.dataset.stakeholder!] = Number(el.value);
  });
  return overrides;
}

function capacities(): number[] | undefined {
  const raw = input("capacities").value.trim();
  if (!raw) return undefined;
  return raw.split(/[\s,;]+/).map(Number);
}

async function uploadDataset() {
  try {
    uploadedDataset = JSON.parse(input("dataset-json").value);
  } catch (err) {
    setStatus(`dataset is not valid JSON: ${describeError(err)}`, true);
    return;
  }
  try {
    const { id } = await api.uploadDataset(uploadedDataset);
    state = { ...initialState(), datasetId: id };
    state.features = await api.getFeatures(id);
    window.location.hash = id;
    setStatus(`dataset ${id} uploaded`);
    renderAll();
  } catch (err) {
    setStatus(describeError(err), true);
  }
}

async function runSolve() {
  if (!state.datasetId) {
    setStatus("upload a dataset first", true);
    return;
  }
  try {
    const step = Number(input("step").value) || 0.001;
    const result = await api.solve(state.datasetId, { capacities: capacities(), step });
    state = { ...state, result, selection: [], highlight: -1, whatif: null, step };
    setStatus(`${result.plans.length} trade-off plans`);
    renderAll();
  } catch (err) {
    setStatus(describeError(err), true);
  }
}

async function runWhatif() {
  if (!state.datasetId) return;
  const alpha = Number(input("alpha").value);
  $("alpha-value").textContent = alpha.toFixed(3);
  const { signal, token } = whatifGuard.issue();
  try {
    const report = await api.whatif(
      state.datasetId,
      { alpha, capacities: capacities(), stakeholder_weight_overrides: weightOverrides() },
      signal,
    );
    if (!whatifGuard.isCurrent(token)) return; // superseded by a newer slider move
    const highlight = state.result
      ? findPlanIndexByAssignment(state.result.plans, report.plan.assignment)
      : -1;
    state = { ...state, whatif: report, highlight };
    setStatus(`what-if at alpha ${alpha}`);
    renderAll();
  } catch (err) {
    if ((err as Error).name === "AbortError") return;
    if (!whatifGuard.isCurrent(token)) return;
    setStatus(describeError(err), true);
  }
}

export function boot() {
  $("upload").addEventListener("click", () => void uploadDataset());
  $("solve").addEventListener("click", () => void runSolve());
  input("alpha").addEventListener("input", () => void runWhatif());
  input("dataset-file").addEventListener("change", async () => {
    const file = input("dataset-file").files?.[0];
    if (file) input("dataset-json").value = await file.text();
  });
  renderAll();
}

if (typeof document !== "undefined" && document.getElementById("upload")) {
  boot();
}
