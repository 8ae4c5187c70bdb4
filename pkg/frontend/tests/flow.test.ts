/**
 * Scripted sessions against the real service (spawned by global-setup):
 * the app answers whatever pair the service suggests, reading every number
 * it renders straight from service responses.
 */
import { beforeAll, describe, expect, it } from 'vitest';

import { App } from '../src/app.js';
import { ServiceClient } from '../src/api.js';
import type { Verdict } from '../src/types.js';
import { installDom } from './dom.js';
import { SERVICE_URL } from './service-url.js';

let root: HTMLElement;

beforeAll(() => {
  root = installDom();
});

function freshRoot(): HTMLElement {
  const node = document.createElement('div');
  root.appendChild(node);
  return node;
}

function client(): ServiceClient {
  return new ServiceClient(SERVICE_URL, (input, init) => fetch(input, init));
}

/** Answer suggested pairs until the session completes. */
async function playBySuggestion(app: App, verdictFor: (pair: [number, number]) => Verdict) {
  for (let guard = 0; guard < 100 && !app.state.complete; guard++) {
    const pair = app.state.suggestion;
    expect(pair).not.toBeNull();
    await app.submitVerdict(verdictFor(pair!));
    expect(app.state.error).toBeNull();
  }
  expect(app.state.complete).toBe(true);
}

const FIG3_LABELS = ['c1', 'c2', 'c3', 'c4'];

function fig3Verdict([a, b]: [number, number]): Verdict {
  const key = `${a},${b}`;
  if (key === '1,2' || key === '3,4') return 'second';
  return 'tie';
}

// 5x5 worked example; entry [i][j] = 1 means alternative i+1 wins.
const WORKED = [
  [0, 1, 0, 1, 0],
  [-1, 0, 1, 1, 1],
  [0, -1, 0, 1, -1],
  [-1, -1, -1, 0, 1],
  [0, -1, 1, -1, 0],
];

function workedVerdict([a, b]: [number, number]): Verdict {
  const v = WORKED[a - 1]![b - 1]!;
  return v === 1 ? 'first' : v === -1 ? 'second' : 'tie';
}

describe('comparison flow', () => {
  it('four-alternative session flags exactly 4 IT1 triads at 100%', async () => {
    const app = await App.create(freshRoot(), client(), FIG3_LABELS);
    await playBySuggestion(app, fig3Verdict);

    const doc = app.dom;
    const flags = doc.querySelectorAll('.triad.flagged');
    expect(flags).toHaveLength(4);
    for (const flag of Array.from(flags)) {
      expect(flag.getAttribute('data-class')).toBe('IT1');
    }
    const gauge = doc.querySelector('.gauge-text')!;
    expect(gauge.textContent).toContain('100%');
    const fill = doc.querySelector('.gauge-fill')!;
    expect(fill.getAttribute('style')).toContain('width: 100%');
  });

  it('worked five-alternative session ends at zeta_g = 0.5', async () => {
    const app = await App.create(freshRoot(), client(), ['A1', 'A2', 'A3', 'A4', 'A5']);

    // the coefficient must never show up before completion
    for (let guard = 0; guard < 100 && !app.state.complete; guard++) {
      expect((app.dom).querySelector('.summary')).toBeNull();
      expect(app.state.zetaG).toBeNull();
      await app.submitVerdict(workedVerdict(app.state.suggestion!));
    }
    expect(app.state.complete).toBe(true);

    const doc = app.dom;
    const summary = doc.querySelector('.summary')!;
    expect(summary.textContent).toContain('ζ_g = 0.5');
    expect(app.state.zetaGExact).toBe('1/2');
    expect(doc.querySelectorAll('.triad.flagged')).toHaveLength(5);
  });

  it('verdict buttons drive the same flow as the controller', async () => {
    const app = await App.create(freshRoot(), client(), ['x', 'y']);
    const doc = app.dom;
    const tie = doc.querySelector('.verdict-tie') as HTMLButtonElement;
    tie.dispatchEvent(new (doc.ownerDocument!.defaultView!.Event)('click'));
    await new Promise((r) => setTimeout(r, 300)); // click handler is async
    expect(app.state.complete).toBe(true);
    expect(doc.querySelector('.comparison.done')).not.toBeNull();
  });

  it('session resume by id shows the same state', async () => {
    const app = await App.create(freshRoot(), client(), FIG3_LABELS);
    await app.judgePair([1, 2], 'second');
    const revived = await App.resume(freshRoot(), client(), app.sessionId);
    expect(revived.state.pairsJudged).toBe(1);
    expect(revived.state.judged['0,1']).toBe(-1);
  });

  it('surfaces service rejections inline and recovers', async () => {
    const app = await App.create(freshRoot(), client(), FIG3_LABELS);
    await app.judgePair([1, 1], 'tie'); // invalid pair
    const doc = app.dom;
    expect(app.state.error).toContain('validation');
    expect(doc.querySelector('.error')!.textContent).toContain('validation');
    await app.judgePair([1, 2], 'tie'); // valid verdict clears the banner
    expect(app.state.error).toBeNull();
    expect(doc.querySelector('.error')).toBeNull();
  });

  it('inspector renders judged triads and stays disabled otherwise', async () => {
    const app = await App.create(freshRoot(), client(), FIG3_LABELS);
    await app.judgePair([1, 2], 'second');
    app.inspect([0, 1, 2]);
    let doc = app.dom;
    expect(doc.querySelector('.inspector.disabled')).not.toBeNull();

    await app.judgePair([1, 3], 'tie');
    await app.judgePair([2, 3], 'tie');
    app.inspect([0, 1, 2]);
    doc = app.dom;
    const svg = doc.querySelector('.inspector svg')!;
    expect(svg).not.toBeNull();
    expect(svg.querySelector('.triad-class')!.textContent).toBe('IT1');
  });
});

describe('replay determinism', () => {
  it('re-entering a recorded event log reproduces the final screen', async () => {
    const app = await App.create(freshRoot(), client(), FIG3_LABELS);
    await playBySuggestion(app, fig3Verdict);
    const replayed = await App.replay(
      freshRoot(),
      client(),
      FIG3_LABELS,
      app.eventLog.slice(),
    );
    expect(replayed.snapshotHtml()).toBe(app.snapshotHtml());
    expect(replayed.state.partialRatioExact).toBe(app.state.partialRatioExact);
  });
});
