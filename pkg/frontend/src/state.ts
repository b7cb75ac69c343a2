/**
 * Client-side session state: a mirror of the server matrix with optimistic
 * edits, the last acknowledged report, and the sdot history behind the
 * sparkline. Mutations are queued so at most one request is outstanding at
 * a time; a rejected edit rolls the affected cells back and flags them.
 */

import { ApiError, Report, ServiceApi, SetEntryResult } from "./api.js";

export type CellState = "diagonal" | "missing" | "filled" | "invalid";

export interface WhatIfPreview {
  report: Report;
  deltaSdot: number;
  /** ranking positions per alternative index, before and after */
  rankBefore: number[];
  rankAfter: number[];
}

export interface ControllerSnapshot {
  labels: string[];
  entries: number[][];
  cellStates: CellState[][];
  report: Report | null;
  components: string[][] | null;
  sdotHistory: number[];
  pendingCount: number;
  lastError: string | null;
}

type Listener = (snap: ControllerSnapshot) => void;

interface QueuedEdit {
  a: number;
  b: number;
  value: number;
  prev: number;
  prevMirror: number;
  resolve: (r: SetEntryResult) => void;
  reject: (e: unknown) => void;
}

/** Ranking positions (0 = best) from a scale vector, ties by index. */
export function rankPositions(scale: number[]): number[] {
  const order = scale
    .map((value, index) => ({ value, index }))
    .sort((lhs, rhs) => rhs.value - lhs.value || lhs.index - rhs.index);
  const positions = new Array<number>(scale.length);
  order.forEach((entry, position) => {
    positions[entry.index] = position;
  });
  return positions;
}

/**
 * Per-cell tint intensities in [0, 1]: contributions renormalized to the
 * current maximum. Negative contributions (possible for the pair split)
 * tint as zero. All zeros when the report is absent or fully consistent.
 */
export function tintMatrix(n: number, report: Report | null): number[][] {
  const tints = Array.from({ length: n }, () => new Array<number>(n).fill(0));
  if (!report) {
    return tints;
  }
  const max = Math.max(0, ...report.perComparison.map((c) => c.value));
  if (max <= 0) {
    return tints;
  }
  for (const { a, b, value } of report.perComparison) {
    const t = Math.max(0, value) / max;
    const ta = tints[a];
    const tb = tints[b];
    if (ta !== undefined && tb !== undefined) {
      ta[b] = t;
      tb[a] = t;
    }
  }
  return tints;
}

export class SessionController {
  private id: string | null = null;
  private labels: string[] = [];
  private entries: number[][] = [];
  private invalidCells = new Map<string, string>();
  private report: Report | null = null;
  private components: string[][] | null = null;
  private sdotHistory: number[] = [];
  private queue: QueuedEdit[] = [];
  private inFlight = false;
  private lastError: string | null = null;
  private listeners: Listener[] = [];

  constructor(readonly api: ServiceApi) {}

  get sessionId(): string {
    if (this.id === null) {
      throw new Error("no session attached");
    }
    return this.id;
  }

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    const snap = this.snapshot();
    for (const listener of this.listeners) {
      listener(snap);
    }
  }

  snapshot(): ControllerSnapshot {
    const n = this.labels.length;
    const cellStates: CellState[][] = Array.from({ length: n }, (_, a) =>
      Array.from({ length: n }, (_, b): CellState => {
        if (a === b) {
          return "diagonal";
        }
        if (this.invalidCells.has(`${a},${b}`)) {
          return "invalid";
        }
        return (this.entries[a]?.[b] ?? 0) > 0 ? "filled" : "missing";
      }),
    );
    return {
      labels: [...this.labels],
      entries: this.entries.map((row) => [...row]),
      cellStates,
      report: this.report,
      components: this.components,
      sdotHistory: [...this.sdotHistory],
      pendingCount: this.queue.length + (this.inFlight ? 1 : 0),
      lastError: this.lastError,
    };
  }

  async create(labels: string[], gamma?: number): Promise<void> {
    const state = await this.api.createSession(labels, gamma);
    this.hydrate(state);
  }

  async attach(id: string): Promise<void> {
    const state = await this.api.getSession(id);
    this.hydrate(state);
    if (state.connected) {
      this.report = await this.api.getReport(id);
    }
    this.emit();
  }

  private hydrate(state: {
    id: string;
    labels: string[];
    entries: number[][];
    historyLength: number;
    connected: boolean;
  }): void {
    this.id = state.id;
    this.labels = state.labels;
    this.entries = state.entries.map((row) => [...row]);
    this.report = null;
    this.components = state.connected ? null : this.components;
    // flat prefix for mutations made before this client attached
    this.sdotHistory = new Array<number>(state.historyLength).fill(0);
    this.invalidCells.clear();
    this.lastError = null;
    this.emit();
  }

  /**
   * Optimistically writes both reciprocal cells, queues the server call,
   * and rolls back on rejection. Resolves with the server's verdict.
   */
  editCell(a: number, b: number, value: number): Promise<SetEntryResult> {
    if (this.id === null) {
      return Promise.reject(new Error("no session attached"));
    }
    if (a === b) {
      return Promise.reject(new Error("diagonal cells are fixed at 1"));
    }
    const rowA = this.entries[a];
    const rowB = this.entries[b];
    if (rowA === undefined || rowB === undefined) {
      return Promise.reject(new Error("cell out of range"));
    }
    const prev = rowA[b] ?? 0;
    const prevMirror = rowB[a] ?? 0;
    rowA[b] = value;
    rowB[a] = value > 0 ? 1 / value : 0;
    this.invalidCells.delete(`${a},${b}`);
    this.invalidCells.delete(`${b},${a}`);
    this.emit();
    return new Promise<SetEntryResult>((resolve, reject) => {
      this.queue.push({ a, b, value, prev, prevMirror, resolve, reject });
      void this.pump();
    });
  }

  private async pump(): Promise<void> {
    if (this.inFlight) {
      return;
    }
    const edit = this.queue.shift();
    if (!edit) {
      return;
    }
    this.inFlight = true;
    try {
      const result = await this.api.setEntry(this.sessionId, edit.a, edit.b, edit.value);
      this.lastError = null;
      this.components = result.components;
      if (result.connected && result.report) {
        this.report = result.report;
        this.sdotHistory.push(result.report.sdot);
      } else {
        this.report = null;
        this.sdotHistory.push(0);
      }
      edit.resolve(result);
    } catch (err) {
      const rowA = this.entries[edit.a];
      const rowB = this.entries[edit.b];
      if (rowA !== undefined && rowB !== undefined) {
        rowA[edit.b] = edit.prev;
        rowB[edit.a] = edit.prevMirror;
      }
      const message = err instanceof ApiError ? err.body.message : String(err);
      this.invalidCells.set(`${edit.a},${edit.b}`, message);
      this.lastError = message;
      edit.reject(err);
    } finally {
      this.inFlight = false;
      this.emit();
      void this.pump();
    }
  }

  /** Waits until every queued mutation has been acknowledged. */
  async idle(): Promise<void> {
    while (this.inFlight || this.queue.length > 0) {
      await new Promise((r) => setTimeout(r, 5));
    }
  }

  /**
   * Previews an edit against a throwaway server session: replays the
   * current entries, applies the candidate value, fetches the report, and
   * deletes the copy. The live session is never touched.
   */
  async whatIf(a: number, b: number, value: number, k = 3): Promise<WhatIfPreview> {
    await this.idle();
    const before = this.report;
    const shadow = await this.api.createSession(this.labels);
    try {
      const n = this.labels.length;
      const lo = Math.min(a, b);
      const hi = Math.max(a, b);
      for (let i = 0; i < n; i++) {
        for (let j = i + 1; j < n; j++) {
          if (i === lo && j === hi) {
            await this.api.setEntry(shadow.id, a, b, value);
          } else if ((this.entries[i]?.[j] ?? 0) > 0) {
            await this.api.setEntry(shadow.id, i, j, this.entries[i]![j]!);
          }
        }
      }
      const report = await this.api.getReport(shadow.id, k);
      return {
        report,
        deltaSdot: report.sdot - (before?.sdot ?? 0),
        rankBefore: before ? rankPositions(before.scale) : [],
        rankAfter: rankPositions(report.scale),
      };
    } finally {
      await this.api.deleteSession(shadow.id);
    }
  }

  /** Ordered revisit-this-judgment candidates straight from the service. */
  async suggestRevisions(k = 3): Promise<Report["perComparison"]> {
    await this.idle();
    const report = await this.api.getReport(this.sessionId, k);
    this.report = report;
    this.emit();
    return report.topComparisons ?? [];
  }
}
