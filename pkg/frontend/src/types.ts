/** Wire types of the elicitation service; pairs are 1-based on the wire. */

export type Verdict = 'first' | 'second' | 'tie';

/** -1 | 0 | 1 from the lower-indexed vertex's perspective. */
export type Relation = number;

export interface SessionSummary {
  id: string;
  labels: string[];
  n: number;
  pairs_judged: number;
  pairs_total: number;
  complete: boolean;
  created: string;
  updated: string;
  revision: number;
  suggestion: [number, number] | null;
}

export interface TriadFlag {
  triad: number[];
  class: string;
}

export interface Analysis {
  n: number;
  labels: string[];
  pairs_judged: number;
  pairs_total: number;
  completed_triads: number;
  total_triads: number;
  census: Record<string, number>;
  inconsistent: TriadFlag[];
  inconsistent_count: number;
  partial_ratio: number;
  partial_ratio_exact: string;
  complete: boolean;
  zeta_g: number | null;
  zeta_g_exact: string | null;
  eta: number | null;
  eta_exact: string | null;
  suggestion: [number, number] | null;
  revision: number;
  newly_inconsistent?: TriadFlag[];
}

export interface MatrixDoc {
  n: number;
  labels: string[];
  matrix: (number | null)[][];
  revision: number;
}

export interface ServiceError {
  error: string;
  detail: string;
}

/**
 * Everything the screens render. Populated exclusively from service
 * responses; the client never computes censuses or indices itself.
 */
export interface ViewState {
  sessionId: string;
  labels: string[];
  /** "i,j" (0-based, i<j) -> relation, for judged pairs only. */
  judged: Record<string, Relation>;
  suggestion: [number, number] | null;
  inconsistent: TriadFlag[];
  newlyInconsistent: TriadFlag[];
  completedTriads: number;
  totalTriads: number;
  pairsJudged: number;
  pairsTotal: number;
  partialRatio: number;
  partialRatioExact: string;
  complete: boolean;
  zetaG: number | null;
  zetaGExact: string | null;
  eta: number | null;
  etaExact: string | null;
  revision: number;
  error: string | null;
}
