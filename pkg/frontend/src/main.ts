/**
 * Console wiring: session boot form, matrix grid, ranking panel, revision
 * cards, and the what-if preview strip. One mutation is in flight at a
 * time; everything displayed comes from service responses.
 */

import { ApiClient } from "./api.js";
import { SessionController } from "./state.js";
import { renderMatrix } from "./views/matrix.js";
import { renderRanking } from "./views/ranking.js";
import { renderRevisions } from "./views/revisions.js";

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node;
}

export function boot(baseUrl: string): SessionController {
  const api = new ApiClient(baseUrl);
  const controller = new SessionController(api);

  const matrixHost = el("matrix");
  const rankingHost = el("ranking");
  const revisionsHost = el("revisions");
  const whatIfHost = el("whatif");
  const statusHost = el("status");

  const refreshRevisions = async () => {
    try {
      const candidates = await controller.suggestRevisions(3);
      renderRevisions(revisionsHost, controller.snapshot(), candidates);
    } catch {
      renderRevisions(revisionsHost, controller.snapshot(), []);
    }
  };

  controller.onChange((snap) => {
    renderMatrix(matrixHost, snap, {
      onEdit: (a, b, value) => {
        controller
          .editCell(a, b, value)
          .then(() => refreshRevisions())
          .catch(() => undefined); // surfaced via cell state + status line
      },
    });
    renderRanking(rankingHost, snap);
    statusHost.textContent = snap.lastError
      ? `rejected: ${snap.lastError}`
      : snap.pendingCount > 0
        ? "saving..."
        : "";
  });

  const form = el("boot-form") as HTMLFormElement;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const input = el("labels-input") as HTMLInputElement;
    const labels = input.value
      .split(",")
      .map((s) => s.trim())
      .filter(Boolean);
    controller.create(labels).catch((err) => {
      statusHost.textContent = String(err);
    });
  });

  const whatIfForm = el("whatif-form") as HTMLFormElement;
  whatIfForm.addEventListener("submit", (event) => {
    event.preventDefault();
    const a = Number((el("whatif-a") as HTMLInputElement).value);
    const b = Number((el("whatif-b") as HTMLInputElement).value);
    const value = Number((el("whatif-value") as HTMLInputElement).value);
    whatIfHost.textContent = "previewing...";
    controller
      .whatIf(a, b, value)
      .then((preview) => {
        const sign = preview.deltaSdot >= 0 ? "+" : "";
        whatIfHost.textContent =
          `would move inconsistency by ${sign}${preview.deltaSdot.toExponential(2)} ` +
          `(to ${preview.report.sdot.toExponential(2)}); nothing committed`;
      })
      .catch((err) => {
        whatIfHost.textContent = `preview failed: ${err}`;
      });
  });

  return controller;
}

declare global {
  interface Window {
    pcmConsole?: SessionController;
  }
}

if (typeof document !== "undefined" && document.getElementById("boot-form")) {
  window.pcmConsole = boot(
    new URLSearchParams(window.location.search).get("service") ?? "http://127.0.0.1:8000",
  );
}
