/**
 * Revisit-this-judgment cards: the service's top-k comparisons by
 * inconsistency share, each with the currently recorded value. An empty
 * list renders as a "consistent" badge.
 */

import { PairContribution } from "../api.js";
import { ControllerSnapshot } from "../state.js";

export function renderRevisions(
  container: HTMLElement,
  snap: ControllerSnapshot,
  candidates: PairContribution[],
): void {
  container.textContent = "";
  if (candidates.length === 0) {
    const badge = document.createElement("div");
    badge.className = "consistent-badge";
    badge.textContent = snap.report ? "consistent" : "no report yet";
    container.appendChild(badge);
    return;
  }
  for (const { a, b, value } of candidates) {
    const card = document.createElement("div");
    card.className = "revision-card";
    card.dataset.a = String(a);
    card.dataset.b = String(b);
    const title = document.createElement("strong");
    title.textContent = `${snap.labels[a]} vs ${snap.labels[b]}`;
    const detail = document.createElement("span");
    const current = snap.entries[a]?.[b] ?? 0;
    detail.textContent = ` currently ${current.toPrecision(3)}, contributes ${value.toExponential(2)}`;
    card.append(title, detail);
    container.appendChild(card);
  }
}
