/**
 * Ranking panel: horizontal bars of the L1 preference scale (they sum to
 * one), plus a sparkline of the inconsistency rate across accepted
 * mutations and a badge with the current value.
 */

import { ControllerSnapshot } from "../state.js";

export function renderRanking(container: HTMLElement, snap: ControllerSnapshot): void {
  container.textContent = "";
  const report = snap.report;

  const badge = document.createElement("div");
  badge.className = "sdot-badge";
  if (report) {
    badge.textContent = `inconsistency ${report.sdot.toExponential(2)} nats/step`;
    badge.dataset.sdot = String(report.sdot);
  } else {
    badge.textContent = snap.components
      ? `graph in ${snap.components.length} pieces`
      : "no report yet";
  }
  container.appendChild(badge);

  if (report) {
    const list = document.createElement("div");
    list.className = "bars";
    const order = report.scale
      .map((value, index) => ({ value, index }))
      .sort((lhs, rhs) => rhs.value - lhs.value || lhs.index - rhs.index);
    const max = order[0]?.value ?? 1;
    for (const { value, index } of order) {
      const row = document.createElement("div");
      row.className = "bar-row";
      row.dataset.alternative = String(index);
      row.dataset.value = String(value);
      const label = document.createElement("span");
      label.className = "bar-label";
      label.textContent = snap.labels[index] ?? "";
      const track = document.createElement("div");
      track.className = "bar-track";
      const fill = document.createElement("div");
      fill.className = "bar-fill";
      fill.style.width = `${(100 * value) / max}%`;
      track.appendChild(fill);
      const amount = document.createElement("span");
      amount.className = "bar-value";
      amount.textContent = value.toFixed(3);
      row.append(label, track, amount);
      list.appendChild(row);
    }
    container.appendChild(list);
  }

  const spark = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  spark.setAttribute("class", "sparkline");
  spark.setAttribute("viewBox", "0 0 100 24");
  spark.setAttribute("preserveAspectRatio", "none");
  spark.dataset.points = String(snap.sdotHistory.length);
  const history = snap.sdotHistory;
  if (history.length > 1) {
    const max = Math.max(...history, 1e-12);
    const step = 100 / (history.length - 1);
    const points = history
      .map((v, i) => `${(i * step).toFixed(2)},${(22 - (20 * v) / max).toFixed(2)}`)
      .join(" ");
    const line = document.createElementNS("http://www.w3.org/2000/svg", "polyline");
    line.setAttribute("points", points);
    line.setAttribute("fill", "none");
    line.setAttribute("stroke", "currentColor");
    spark.appendChild(line);
  }
  container.appendChild(spark);
}
