/**
 * Typed client for the elicitation service. Every number shown anywhere in
 * the console originates from one of these responses; the client performs
 * no index math of its own.
 */

export interface PairContribution {
  a: number;
  b: number;
  value: number;
}

export interface Report {
  sdot: number;
  ci: number | null;
  hci: number | null;
  scale: number[];
  perComparison: PairContribution[];
  perAlternative: number[];
  complete: boolean;
  gamma: number;
  topComparisons?: PairContribution[];
}

export interface HistoryRecord {
  ts: number;
  a: number;
  b: number;
  old: number;
  new: number;
}

export interface SessionState {
  id: string;
  labels: string[];
  gamma: number;
  entries: number[][];
  connected: boolean;
  history: HistoryRecord[];
  historyLength: number;
}

export interface SetEntryResult {
  connected: boolean;
  report: Report | null;
  components: string[][] | null;
}

export interface ServiceErrorBody {
  code: string;
  message: string;
  detail: unknown;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ServiceErrorBody,
  ) {
    super(`${body.code}: ${body.message}`);
  }
}

async function parseError(resp: Response): Promise<ApiError> {
  let body: ServiceErrorBody;
  try {
    body = (await resp.json()) as ServiceErrorBody;
  } catch {
    body = { code: `http-${resp.status}`, message: resp.statusText, detail: null };
  }
  return new ApiError(resp.status, body);
}

/** The slice of the service the console uses; stubbed in unit tests. */
export interface ServiceApi {
  createSession(labels: string[], gamma?: number): Promise<SessionState>;
  getSession(id: string): Promise<SessionState>;
  setEntry(id: string, a: number, b: number, value: number): Promise<SetEntryResult>;
  getReport(id: string, k?: number, gamma?: number): Promise<Report>;
  exportSession(id: string, format?: "csv" | "json"): Promise<string>;
  deleteSession(id: string): Promise<void>;
}

export class ApiClient implements ServiceApi {
  constructor(readonly baseUrl: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const resp = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!resp.ok) {
      throw await parseError(resp);
    }
    if (resp.status === 204) {
      return undefined as T;
    }
    return (await resp.json()) as T;
  }

  createSession(labels: string[], gamma?: number): Promise<SessionState> {
    return this.request("POST", "/sessions", gamma === undefined ? { labels } : { labels, gamma });
  }

  getSession(id: string): Promise<SessionState> {
    return this.request("GET", `/sessions/${id}`);
  }

  setEntry(id: string, a: number, b: number, value: number): Promise<SetEntryResult> {
    return this.request("PUT", `/sessions/${id}/entries`, { a, b, value });
  }

  getReport(id: string, k = 3, gamma?: number): Promise<Report> {
    const params = new URLSearchParams({ k: String(k) });
    if (gamma !== undefined) {
      params.set("gamma", String(gamma));
    }
    return this.request("GET", `/sessions/${id}/report?${params}`);
  }

  exportSession(id: string, format: "csv" | "json" = "csv"): Promise<string> {
    return fetch(`${this.baseUrl}/sessions/${id}/export?format=${format}`).then(async (resp) => {
      if (!resp.ok) {
        throw await parseError(resp);
      }
      return resp.text();
    });
  }

  deleteSession(id: string): Promise<void> {
    return this.request("DELETE", `/sessions/${id}`);
  }
}
