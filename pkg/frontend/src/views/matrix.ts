/**
 * Editable matrix grid: upper triangle takes input, the lower triangle
 * mirrors it read-only as the reciprocal, the diagonal is fixed at 1.
 * Cells are tinted by their share of the current inconsistency,
 * renormalized to the hottest comparison in the latest report.
 */

import { ControllerSnapshot, tintMatrix } from "../state.js";

export interface MatrixCallbacks {
  onEdit: (a: number, b: number, value: number) => void;
  onWhatIf?: (a: number, b: number, value: number) => void;
}

function formatEntry(value: number): string {
  if (value === 0) {
    return "";
  }
  return value.toPrecision(4).replace(/\.?0+$/, "");
}

export function renderMatrix(
  container: HTMLElement,
  snap: ControllerSnapshot,
  callbacks: MatrixCallbacks,
): void {
  const n = snap.labels.length;
  const tints = tintMatrix(n, snap.report);
  container.textContent = "";
  const table = document.createElement("table");
  table.className = "matrix";

  const head = table.insertRow();
  head.insertCell();
  for (const label of snap.labels) {
    const th = document.createElement("th");
    th.textContent = label;
    head.appendChild(th);
  }

  for (let a = 0; a < n; a++) {
    const row = table.insertRow();
    const th = document.createElement("th");
    th.textContent = snap.labels[a] ?? "";
    row.appendChild(th);
    for (let b = 0; b < n; b++) {
      const cell = row.insertCell();
      const state = snap.cellStates[a]?.[b] ?? "missing";
      const value = snap.entries[a]?.[b] ?? 0;
      cell.dataset.a = String(a);
      cell.dataset.b = String(b);
      cell.dataset.state = state;
      const tint = tints[a]?.[b] ?? 0;
      if (tint > 0) {
        cell.style.backgroundColor = `rgba(214, 69, 65, ${(0.15 + 0.75 * tint).toFixed(3)})`;
        cell.title = `share of inconsistency: ${(100 * tint).toFixed(0)}% of hottest`;
      }
      if (a === b) {
        cell.textContent = "1";
        cell.className = "diagonal";
      } else if (a < b) {
        const input = document.createElement("input");
        input.type = "text";
        input.inputMode = "decimal";
        input.value = formatEntry(value);
        input.placeholder = "?";
        if (state === "invalid") {
          input.classList.add("invalid");
          input.title = snap.lastError ?? "rejected";
        }
        input.addEventListener("change", () => {
          const parsed = input.value.trim() === "" ? 0 : Number(input.value);
          if (Number.isFinite(parsed) && parsed >= 0) {
            callbacks.onEdit(a, b, parsed);
          } else {
            input.classList.add("invalid");
            input.title = "enter a positive ratio, or clear to retract";
          }
        });
        cell.appendChild(input);
      } else {
        cell.textContent = formatEntry(value);
        cell.className = "mirror";
      }
    }
  }
  container.appendChild(table);
}
