import type { ViewState } from './types.js';
import { triadRelations } from './state.js';

const NS = 'http://www.w3.org/2000/svg';

/** Corner positions for the three vertices of the inspector triangle. */
const CORNERS: ReadonlyArray<readonly [number, number]> = [
  [60, 28],
  [20, 96],
  [100, 96],
];

/**
 * Display label for a judged triad from its three relations. Pure
 * presentation: the classes of inconsistent triads in the running lists
 * always come from the service; this mapping only captions the diagram
 * (the service does not enumerate consistent triads individually).
 */
export function triadClassLabel(ab: number, ac: number, bc: number): string {
  const directed = Number(ab !== 0) + Number(ac !== 0) + Number(bc !== 0);
  if (directed === 0) return 'CT0';
  if (directed === 1) return 'IT1';
  const wins = [
    Number(ab === 1) + Number(ac === 1),
    Number(ab === -1) + Number(bc === 1),
    Number(ac === -1) + Number(bc === -1),
  ];
  const dominant = wins.some((w) => w === 2);
  if (directed === 3) return dominant ? 'CT3' : 'IT3';
  if (dominant) return 'CT2a';
  const losses = [
    Number(ab === -1) + Number(ac === -1),
    Number(ab === 1) + Number(bc === -1),
    Number(ac === 1) + Number(bc === 1),
  ];
  return losses.some((l) => l === 2) ? 'CT2b' : 'IT2';
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

function line(
  from: readonly [number, number],
  to: readonly [number, number],
  relation: number,
): SVGElement {
  // relation +1: first wins (arrowhead at `from`); -1: second wins; 0: tie
  const attrs: Record<string, string> = {
    x1: String(from[0]),
    y1: String(from[1]),
    x2: String(to[0]),
    y2: String(to[1]),
    stroke: '#333',
    'stroke-width': '1.6',
    class: relation === 0 ? 'edge tie' : 'edge directed',
  };
  if (relation === 0) {
    attrs['stroke-dasharray'] = '5,4';
  } else if (relation === 1) {
    attrs['marker-start'] = 'url(#win)';
  } else {
    attrs['marker-end'] = 'url(#win)';
  }
  const node = svgEl('line', attrs);
  return node;
}

/**
 * Render the three-node diagram for a judged triple: solid arrows point at
 * winners, ties are dashed. Returns null when any pair is unjudged (the
 * inspector stays disabled for incomplete triads).
 */
export function renderTriadDiagram(
  state: ViewState,
  triple: [number, number, number],
): SVGSVGElement | null {
  const [ab, ac, bc] = triadRelations(state, triple);
  if (ab === null || ac === null || bc === null) return null;
  const sorted = [...triple].sort((x, y) => x - y) as [number, number, number];
  const svg = svgEl('svg', {
    viewBox: '0 0 120 120',
    width: '120',
    height: '120',
    class: 'triad-diagram',
  }) as SVGSVGElement;

  const defs = svgEl('defs', {});
  const marker = svgEl('marker', {
    id: 'win',
    viewBox: '0 0 10 10',
    refX: '9',
    refY: '5',
    markerWidth: '7',
    markerHeight: '7',
    orient: 'auto-start-reverse',
  });
  marker.appendChild(svgEl('path', { d: 'M 0 0 L 10 5 L 0 10 z', fill: '#333' }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  const [pa, pb, pc] = CORNERS as [
    readonly [number, number],
    readonly [number, number],
    readonly [number, number],
  ];
  svg.appendChild(line(pa, pb, ab));
  svg.appendChild(line(pa, pc, ac));
  svg.appendChild(line(pb, pc, bc));

  sorted.forEach((v, idx) => {
    const [x, y] = CORNERS[idx]!;
    svg.appendChild(
      svgEl('circle', { cx: String(x), cy: String(y), r: '11', fill: '#fff', stroke: '#333' }),
    );
    const text = svgEl('text', {
      x: String(x),
      y: String(y + 4),
      'text-anchor': 'middle',
      'font-size': '9',
      class: 'vertex-label',
    });
    text.textContent = state.labels[v] ?? String(v + 1);
    svg.appendChild(text);
  });

  const caption = svgEl('text', {
    x: '60',
    y: '116',
    'text-anchor': 'middle',
    'font-size': '10',
    class: 'triad-class',
  });
  caption.textContent = triadClassLabel(ab, ac, bc);
  svg.appendChild(caption);
  return svg;
}
