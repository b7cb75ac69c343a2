import { describe, expect, it } from "vitest";

import { ApiError, Report, ServiceApi, SessionState, SetEntryResult } from "../src/api.js";
import { SessionController, rankPositions, tintMatrix } from "../src/state.js";

function report(overrides: Partial<Report> = {}): Report {
  return {
    sdot: 0.1,
    ci: null,
    hci: null,
    scale: [0.5, 0.3, 0.2],
    perComparison: [
      { a: 0, b: 1, value: 0.08 },
      { a: 0, b: 2, value: 0.02 },
      { a: 1, b: 2, value: 0.0 },
    ],
    perAlternative: [0.05, 0.03, 0.02],
    complete: true,
    gamma: 1,
    ...overrides,
  };
}

/** In-memory stand-in mirroring the service's reciprocal-write semantics. */
class FakeApi implements ServiceApi {
  sessions = new Map<string, { labels: string[]; entries: number[][] }>();
  calls: string[] = [];
  nextReport: Report = report();
  rejectNext: ApiError | null = null;
  private counter = 0;

  async createSession(labels: string[]): Promise<SessionState> {
    const id = `s${this.counter++}`;
    const n = labels.length;
    const entries = Array.from({ length: n }, (_, i) =>
      Array.from({ length: n }, (_, j) => (i === j ? 1 : 0)),
    );
    this.sessions.set(id, { labels, entries });
    this.calls.push(`create:${id}`);
    return {
      id,
      labels,
      gamma: 1,
      entries,
      connected: n === 1,
      history: [],
      historyLength: 0,
    };
  }

  async getSession(id: string): Promise<SessionState> {
    const s = this.sessions.get(id)!;
    return {
      id,
      labels: s.labels,
      gamma: 1,
      entries: s.entries.map((r) => [...r]),
      connected: true,
      history: [],
      historyLength: 0,
    };
  }

  async setEntry(id: string, a: number, b: number, value: number): Promise<SetEntryResult> {
    this.calls.push(`set:${id}:${a},${b}=${value}`);
    if (this.rejectNext) {
      const err = this.rejectNext;
      this.rejectNext = null;
      throw err;
    }
    const s = this.sessions.get(id)!;
    s.entries[a]![b] = value;
    s.entries[b]![a] = value > 0 ? 1 / value : 0;
    return { connected: true, report: this.nextReport, components: null };
  }

  async getReport(id: string, k = 3): Promise<Report> {
    this.calls.push(`report:${id}:k=${k}`);
    const top = [...this.nextReport.perComparison]
      .filter((c) => c.value > 1e-9)
      .sort((x, y) => y.value - x.value)
      .slice(0, k);
    return { ...this.nextReport, topComparisons: top };
  }

  async exportSession(): Promise<string> {
    return "";
  }

  async deleteSession(id: string): Promise<void> {
    this.calls.push(`delete:${id}`);
    this.sessions.delete(id);
  }
}

describe("rankPositions", () => {
  it("orders descending with index tie-break", () => {
    expect(rankPositions([0.2, 0.5, 0.3])).toEqual([2, 0, 1]);
    expect(rankPositions([0.4, 0.4, 0.2])).toEqual([0, 1, 2]);
  });
});

describe("tintMatrix", () => {
  it("renormalizes to the hottest comparison and mirrors", () => {
    const tints = tintMatrix(3, report());
    expect(tints[0]![1]).toBe(1);
    expect(tints[1]![0]).toBe(1);
    expect(tints[0]![2]).toBeCloseTo(0.25, 12);
    expect(tints[1]![2]).toBe(0);
  });

  it("clamps negative contributions to zero", () => {
    const r = report({
      perComparison: [
        { a: 0, b: 1, value: 0.1 },
        { a: 0, b: 2, value: -0.02 },
        { a: 1, b: 2, value: 0 },
      ],
    });
    const tints = tintMatrix(3, r);
    expect(tints[0]![2]).toBe(0);
  });

  it("is all zeros without a report or on a consistent matrix", () => {
    expect(tintMatrix(2, null).flat()).toEqual([0, 0, 0, 0]);
    const consistent = report({
      perComparison: [{ a: 0, b: 1, value: 0 }],
    });
    expect(tintMatrix(2, consistent).flat()).toEqual([0, 0, 0, 0]);
  });
});

describe("SessionController", () => {
  it("echoes edits optimistically and reconciles the mirror cell", async () => {
    const api = new FakeApi();
    const controller = new SessionController(api);
    await controller.create(["a", "b", "c"]);
    const done = controller.editCell(0, 1, 4);
    const snap = controller.snapshot();
    expect(snap.entries[0]![1]).toBe(4);
    expect(snap.entries[1]![0]).toBeCloseTo(0.25, 12);
    expect(snap.cellStates[0]![1]).toBe("filled");
    await done;
    expect(controller.snapshot().report?.sdot).toBe(0.1);
    expect(controller.snapshot().sdotHistory).toEqual([0.1]);
  });

  it("rolls back and flags the cell when the server rejects", async () => {
    const api = new FakeApi();
    const controller = new SessionController(api);
    await controller.create(["a", "b"]);
    await controller.editCell(0, 1, 2);
    api.rejectNext = new ApiError(400, { code: "bad-value", message: "nope", detail: null });
    await expect(controller.editCell(0, 1, 7)).rejects.toThrow("nope");
    const snap = controller.snapshot();
    expect(snap.entries[0]![1]).toBe(2);
    expect(snap.entries[1]![0]).toBeCloseTo(0.5, 12);
    expect(snap.cellStates[0]![1]).toBe("invalid");
    expect(snap.lastError).toBe("nope");
  });

  it("serializes mutations: one request outstanding at a time", async () => {
    const api = new FakeApi();
    const controller = new SessionController(api);
    await controller.create(["a", "b", "c"]);
    const edits = [
      controller.editCell(0, 1, 2),
      controller.editCell(0, 2, 3),
      controller.editCell(1, 2, 1.5),
    ];
    await Promise.all(edits);
    const sets = api.calls.filter((c) => c.startsWith("set:"));
    expect(sets).toEqual([
      `set:s0:0,1=2`,
      `set:s0:0,2=3`,
      `set:s0:1,2=1.5`,
    ]);
    expect(controller.snapshot().sdotHistory.length).toBe(3);
  });

  it("what-if uses a throwaway session and leaves the live one alone", async () => {
    const api = new FakeApi();
    const controller = new SessionController(api);
    await controller.create(["a", "b", "c"]);
    await controller.editCell(0, 1, 2);
    await controller.editCell(1, 2, 2);
    api.nextReport = report({ sdot: 0.4 });
    const preview = await controller.whatIf(0, 2, 9);
    expect(preview.report.sdot).toBe(0.4);
    expect(preview.deltaSdot).toBeCloseTo(0.3, 12);
    // shadow session created, written, read, deleted; live entries untouched
    expect(api.calls).toContain("delete:s1");
    expect(api.sessions.has("s1")).toBe(false);
    const live = api.sessions.get("s0")!;
    expect(live.entries[0]![2]).toBe(0);
    expect(controller.snapshot().entries[0]![2]).toBe(0);
    const shadowSets = api.calls.filter((c) => c.startsWith("set:s1"));
    expect(shadowSets).toEqual([
      `set:s1:0,1=2`,
      `set:s1:0,2=9`,
      `set:s1:1,2=2`,
    ]);
  });

  it("suggestRevisions returns the service's ordered top-k", async () => {
    const api = new FakeApi();
    const controller = new SessionController(api);
    await controller.create(["a", "b", "c"]);
    await controller.editCell(0, 1, 2);
    const cards = await controller.suggestRevisions(2);
    expect(cards.map((c) => [c.a, c.b])).toEqual([
      [0, 1],
      [0, 2],
    ]);
    expect(cards[0]!.value).toBeGreaterThanOrEqual(cards[1]!.value);
  });
});
