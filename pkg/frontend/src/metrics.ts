// Metrics panel. Single source of truth: every rendered number is a
// field of the last /api/metrics body, formatted but never computed.

import type { MetricsPayload } from "./types.js";

export function formatRate(value: number): string {
  return `${(value * 100).toFixed(1)}%`;
}

const METRIC_FLAGS: Record<string, string> = {
  precision: "precision-zero-denominator",
  recall: "recall-zero-denominator",
  f_measure: "f-measure-zero-denominator",
};

export function renderMetrics(root: HTMLElement, payload: MetricsPayload | null, stale = false): void {
  root.innerHTML = "";
  root.classList.toggle("stale", stale);
  if (stale) {
    const note = document.createElement("div");
    note.className = "stale-note";
    note.textContent = "metrics unavailable - showing last known values";
    root.appendChild(note);
  }
  if (!payload) {
    const empty = document.createElement("div");
    empty.className = "empty-state";
    empty.textContent = "No metrics yet.";
    root.appendChild(empty);
    return;
  }
  if (payload.confusion.total === 0) {
    const empty = document.createElement("div");
    empty.className = "empty-state";
    empty.textContent = "No gold labels yet - label a few summaries to see metrics.";
    root.appendChild(empty);
    return;
  }

  const table = document.createElement("table");
  table.className = "confusion";
  table.innerHTML = `
    <tr><th></th><th>pred P</th><th>pred N</th></tr>
    <tr><th>gold P</th><td data-cell="tp">${payload.confusion.tp}</td><td data-cell="fn">${payload.confusion.fn}</td></tr>
    <tr><th>gold N</th><td data-cell="fp">${payload.confusion.fp}</td><td data-cell="tn">${payload.confusion.tn}</td></tr>
  `;
  root.appendChild(table);

  const list = document.createElement("dl");
  list.className = "metric-list";
  const entries: Array<[keyof MetricsPayload & string, string]> = [
    ["accuracy", "accuracy"],
    ["precision", "precision"],
    ["recall", "recall"],
    ["f_measure", "f-measure"],
    ["error_rate", "error rate"],
  ];
  for (const [field, title] of entries) {
    const dt = document.createElement("dt");
    dt.textContent = title;
    const dd = document.createElement("dd");
    dd.dataset.metric = field;
    dd.textContent = formatRate(payload[field] as number);
    const flag = METRIC_FLAGS[field];
    if (flag && payload.flags.includes(flag)) {
      dd.classList.add("undefined-metric");
      dd.title = "zero denominator; reported as 0 by the service";
    }
    list.appendChild(dt);
    list.appendChild(dd);
  }
  root.appendChild(list);

  const total = document.createElement("div");
  total.className = "labeled-total";
  total.dataset.metric = "total";
  total.textContent = `${payload.confusion.total} labeled`;
  root.appendChild(total);
}
