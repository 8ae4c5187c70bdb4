import type { Analysis, MatrixDoc, SessionSummary, Verdict } from './types.js';

export class ServiceRequestError extends Error {
  constructor(
    public status: number,
    public code: string,
    public detail: string,
  ) {
    super(`${code}: ${detail}`);
  }
}

type FetchLike = typeof fetch;

/**
 * Typed client for the session API. Submissions retry on transport
 * failures: because a re-sent verdict overwrites itself, a duplicate POST
 * is harmless, and the revision counter distinguishes "request lost" from
 * "response lost".
 */
export class ServiceClient {
  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = globalThis.fetch,
    private retries = 3,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const body = await res.json();
    if (!res.ok) {
      throw new ServiceRequestError(res.status, body.error ?? 'error', body.detail ?? '');
    }
    return body as T;
  }

  createSession(labels: string[]): Promise<SessionSummary> {
    return this.request('/sessions', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ labels }),
    });
  }

  getSession(id: string): Promise<SessionSummary> {
    return this.request(`/sessions/${id}`);
  }

  getAnalysis(id: string): Promise<Analysis> {
    return this.request(`/sessions/${id}/analysis`);
  }

  getMatrix(id: string): Promise<MatrixDoc> {
    return this.request(`/sessions/${id}/matrix`);
  }

  getSuggestion(id: string): Promise<{ pair: [number, number] | null; revision: number }> {
    return this.request(`/sessions/${id}/suggestion`);
  }

  /**
   * Record one verdict for a 1-based pair. `knownRevision` is the latest
   * revision this client observed; on a transport failure the client asks
   * the service whether the write landed (revision advanced and the pair
   * holds the submitted value) before re-sending.
   */
  async recordComparison(
    id: string,
    pair: [number, number],
    verdict: Verdict,
    knownRevision: number,
  ): Promise<Analysis> {
    let lastError: unknown = null;
    for (let attempt = 0; attempt <= this.retries; attempt++) {
      try {
        return await this.request<Analysis>(`/sessions/${id}/comparisons`, {
          method: 'POST',
          headers: { 'Content-Type': 'application/json' },
          body: JSON.stringify({ pair, verdict }),
        });
      } catch (err) {
        if (err instanceof ServiceRequestError) throw err; // real rejection, not transport
        lastError = err;
        const applied = await this.verdictApplied(id, pair, verdict, knownRevision).catch(
          () => null,
        );
        if (applied) return applied;
      }
    }
    throw lastError instanceof Error ? lastError : new Error(String(lastError));
  }

  private async verdictApplied(
    id: string,
    pair: [number, number],
    verdict: Verdict,
    knownRevision: number,
  ): Promise<Analysis | null> {
    const matrix = await this.getMatrix(id);
    if (matrix.revision <= knownRevision) return null;
    const [a, b] = pair;
    const value = matrix.matrix[a - 1]?.[b - 1];
    const expected = verdict === 'first' ? 1 : verdict === 'second' ? -1 : 0;
    if (value !== expected) return null;
    return this.getAnalysis(id);
  }
}
