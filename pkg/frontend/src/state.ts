import type { Analysis, MatrixDoc, SessionSummary, ViewState } from './types.js';

export function initialState(session: SessionSummary): ViewState {
  return {
    sessionId: session.id,
    labels: session.labels,
    judged: {},
    suggestion: session.suggestion,
    inconsistent: [],
    newlyInconsistent: [],
    completedTriads: 0,
    totalTriads: 0,
    pairsJudged: session.pairs_judged,
    pairsTotal: session.pairs_total,
    partialRatio: 0,
    partialRatioExact: '0',
    complete: session.complete,
    zetaG: null,
    zetaGExact: null,
    eta: null,
    etaExact: null,
    revision: session.revision,
    error: null,
  };
}

/** Fold a service analysis into the view; no client-side recomputation. */
export function applyAnalysis(state: ViewState, analysis: Analysis): ViewState {
  return {
    ...state,
    labels: analysis.labels,
    suggestion: analysis.suggestion,
    inconsistent: analysis.inconsistent,
    newlyInconsistent: analysis.newly_inconsistent ?? [],
    completedTriads: analysis.completed_triads,
    totalTriads: analysis.total_triads,
    pairsJudged: analysis.pairs_judged,
    pairsTotal: analysis.pairs_total,
    partialRatio: analysis.partial_ratio,
    partialRatioExact: analysis.partial_ratio_exact,
    complete: analysis.complete,
    zetaG: analysis.zeta_g,
    zetaGExact: analysis.zeta_g_exact,
    eta: analysis.eta,
    etaExact: analysis.eta_exact,
    revision: analysis.revision,
    error: null,
  };
}

export function applyMatrix(state: ViewState, doc: MatrixDoc): ViewState {
  const judged: ViewState['judged'] = {};
  for (let i = 0; i < doc.n; i++) {
    for (let j = i + 1; j < doc.n; j++) {
      const value = doc.matrix[i]?.[j];
      if (value !== null && value !== undefined) judged[`${i},${j}`] = value;
    }
  }
  return { ...state, judged };
}

export function withError(state: ViewState, message: string): ViewState {
  return { ...state, error: message };
}

/** Relations of a 0-based triple as [ab, ac, bc]; null when unjudged. */
export function triadRelations(
  state: ViewState,
  triple: [number, number, number],
): [number | null, number | null, number | null] {
  const sorted = [...triple].sort((x, y) => x - y);
  const [a, b, c] = sorted as [number, number, number];
  const get = (i: number, j: number) => state.judged[`${i},${j}`] ?? null;
  return [get(a, b), get(a, c), get(b, c)];
}
