import type { AnalysisWire, ApiGame, ClassifyWire, HintWire, Pair } from './types.js';

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    detail: string,
  ) {
    super(detail);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private base = '',
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchImpl(this.base + path, init);
    let body: any = {};
    try {
      body = await res.json();
    } catch {
      // non-JSON error body; keep the empty object
    }
    if (!res.ok) {
      throw new ApiError(res.status, body.error ?? 'error', body.detail ?? `HTTP ${res.status}`);
    }
    return body as T;
  }

  classify(m: number, n: number, a: number, b: number): Promise<ClassifyWire> {
    return this.request(`/api/classify?m=${m}&n=${n}&a=${a}&b=${b}`);
  }

  analysis(m: number, n: number, a: number, b: number): Promise<AnalysisWire> {
    return this.request(`/api/analysis?m=${m}&n=${n}&a=${a}&b=${b}`);
  }

  newGame(m: number, n: number, a: number, b: number, humanRole?: 'first' | 'second'): Promise<ApiGame> {
    return this.request('/api/game', {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(humanRole ? { m, n, a, b, human_role: humanRole } : { m, n, a, b }),
    });
  }

  game(id: string): Promise<ApiGame> {
    return this.request(`/api/game/${id}`);
  }

  move(id: string, to: Pair): Promise<ApiGame> {
    return this.request(`/api/game/${id}/move`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ to }),
    });
  }

  hint(id: string): Promise<HintWire> {
    return this.request(`/api/game/${id}/hint`);
  }
}
