import type { TriadFlag, Verdict, ViewState } from './types.js';
import { renderTriadDiagram } from './diagram.js';

type Handler = (verdict: Verdict) => void;

function el(
  tag: string,
  attrs: Record<string, string | ((e: Event) => void)> = {},
  ...children: Array<string | Node | null>
): HTMLElement {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) {
    if (typeof v === 'function') node.addEventListener(k.slice(2), v as EventListener);
    else node.setAttribute(k, v);
  }
  for (const c of children) {
    if (c === null) continue;
    node.appendChild(typeof c === 'string' ? document.createTextNode(c) : c);
  }
  return node;
}

function triadKey(flag: TriadFlag): string {
  return flag.triad.join(',');
}

function labelOf(state: ViewState, oneBased: number): string {
  return state.labels[oneBased - 1] ?? String(oneBased);
}

export function renderComparisonScreen(state: ViewState, onVerdict: Handler): HTMLElement {
  if (state.complete || state.suggestion === null) {
    return el('section', { class: 'comparison done' }, el('p', {}, 'All pairs judged.'));
  }
  const [a, b] = state.suggestion;
  const nameA = labelOf(state, a);
  const nameB = labelOf(state, b);
  return el(
    'section',
    { class: 'comparison' },
    el('p', { class: 'question' }, `Which do you prefer: ${nameA} or ${nameB}?`),
    el(
      'div',
      { class: 'verdict-buttons' },
      el('button', { class: 'verdict-first', onclick: () => onVerdict('first') }, `${nameA} wins`),
      el('button', { class: 'verdict-tie', onclick: () => onVerdict('tie') }, 'tie'),
      el('button', { class: 'verdict-second', onclick: () => onVerdict('second') }, `${nameB} wins`),
    ),
  );
}

export function renderGauge(state: ViewState): HTMLElement {
  const percent = Math.round(state.partialRatio * 100);
  const fill = el('div', { class: 'gauge-fill', style: `width: ${percent}%` });
  return el(
    'div',
    { class: 'gauge' },
    fill,
    el(
      'span',
      { class: 'gauge-text' },
      `${percent}% of ${state.completedTriads} judged triads inconsistent`,
    ),
  );
}

export function renderTriadList(
  state: ViewState,
  onInspect?: (triple: [number, number, number]) => void,
): HTMLElement {
  const newKeys = new Set(state.newlyInconsistent.map(triadKey));
  const items = state.inconsistent.map((flag) => {
    const names = flag.triad.map((v) => labelOf(state, v)).join(', ');
    const classes = ['triad', 'flagged', newKeys.has(triadKey(flag)) ? 'new' : '']
      .filter(Boolean)
      .join(' ');
    const item = el(
      'li',
      { class: classes, 'data-class': flag.class },
      `{${names}}: ${flag.class}`,
    );
    if (onInspect) {
      item.addEventListener('click', () =>
        onInspect(flag.triad.map((v) => v - 1) as [number, number, number]),
      );
    }
    return item;
  });
  return el(
    'section',
    { class: 'triads' },
    el('h2', {}, `Inconsistent triads (${state.inconsistent.length})`),
    el('ul', { class: 'triad-list' }, ...items),
  );
}

/** Final indices appear only for complete sessions, mirroring the service. */
export function renderSummary(state: ViewState): HTMLElement | null {
  if (!state.complete || state.zetaG === null) return null;
  return el(
    'section',
    { class: 'summary' },
    el('p', {}, `ζ_g = ${state.zetaG} (${state.zetaGExact})`),
    el('p', {}, `η = ${state.eta} (${state.etaExact})`),
  );
}

export function renderInspector(state: ViewState, triple: [number, number, number]): HTMLElement {
  const diagram = renderTriadDiagram(state, triple);
  if (diagram === null) {
    return el(
      'section',
      { class: 'inspector disabled' },
      el('p', {}, 'Judge all three pairs to inspect this triad.'),
    );
  }
  return el('section', { class: 'inspector' }, diagram);
}

export function renderError(state: ViewState): HTMLElement | null {
  if (!state.error) return null;
  return el('div', { class: 'error', role: 'alert' }, state.error);
}

export function renderApp(
  state: ViewState,
  onVerdict: Handler,
  inspected: [number, number, number] | null,
  onInspect: (triple: [number, number, number]) => void,
): HTMLElement {
  const progress = el(
    'p',
    { class: 'progress' },
    `${state.pairsJudged}/${state.pairsTotal} pairs judged, ` +
      `${state.completedTriads}/${state.totalTriads} triads complete`,
  );
  return el(
    'main',
    { class: 'app' },
    renderError(state),
    progress,
    renderComparisonScreen(state, onVerdict),
    renderGauge(state),
    renderSummary(state),
    renderTriadList(state, onInspect),
    inspected ? renderInspector(state, inspected) : null,
  );
}
