import { ServiceClient, ServiceRequestError } from './api.js';
import { applyAnalysis, applyMatrix, initialState, withError } from './state.js';
import type { Verdict, ViewState } from './types.js';
import { renderApp } from './ui.js';

export interface LoggedVerdict {
  pair: [number, number];
  verdict: Verdict;
}

/**
 * Controller: owns the view state, talks to the service, re-renders into
 * the root node after every change. Session resume works by URL hash
 * (#s=<id>); the event log makes a session replayable verbatim.
 */
export class App {
  private inspected: [number, number, number] | null = null;
  readonly eventLog: LoggedVerdict[] = [];

  private constructor(
    private root: HTMLElement,
    private client: ServiceClient,
    public state: ViewState,
  ) {}

  static async create(root: HTMLElement, client: ServiceClient, labels: string[]): Promise<App> {
    const session = await client.createSession(labels);
    const app = new App(root, client, initialState(session));
    await app.refresh();
    return app;
  }

  static async resume(root: HTMLElement, client: ServiceClient, id: string): Promise<App> {
    const session = await client.getSession(id);
    const app = new App(root, client, initialState(session));
    await app.refresh();
    return app;
  }

  /** Re-enter a recorded run against a fresh session. */
  static async replay(
    root: HTMLElement,
    client: ServiceClient,
    labels: string[],
    log: LoggedVerdict[],
  ): Promise<App> {
    const app = await App.create(root, client, labels);
    for (const entry of log) {
      await app.judgePair(entry.pair, entry.verdict);
    }
    return app;
  }

  get sessionId(): string {
    return this.state.sessionId;
  }

  /** Rendered container, for host pages and tests. */
  get dom(): HTMLElement {
    return this.root;
  }

  /** Answer the currently suggested pair. */
  async submitVerdict(verdict: Verdict): Promise<void> {
    const pair = this.state.suggestion;
    if (!pair) return;
    await this.judgePair(pair, verdict);
  }

  /** Record a verdict for any pair (1-based), then re-render. */
  async judgePair(pair: [number, number], verdict: Verdict): Promise<void> {
    try {
      const analysis = await this.client.recordComparison(
        this.state.sessionId,
        pair,
        verdict,
        this.state.revision,
      );
      this.eventLog.push({ pair, verdict });
      this.state = applyAnalysis(this.state, analysis);
      const matrix = await this.client.getMatrix(this.state.sessionId);
      this.state = applyMatrix(this.state, matrix);
    } catch (err) {
      const message =
        err instanceof ServiceRequestError
          ? `${err.code}: ${err.detail}`
          : `network failure: ${err instanceof Error ? err.message : String(err)}`;
      this.state = withError(this.state, message);
    }
    this.render();
  }

  async refresh(): Promise<void> {
    const analysis = await this.client.getAnalysis(this.state.sessionId);
    this.state = applyAnalysis(this.state, analysis);
    const matrix = await this.client.getMatrix(this.state.sessionId);
    this.state = applyMatrix(this.state, matrix);
    this.render();
  }

  inspect(triple: [number, number, number]): void {
    this.inspected = triple;
    this.render();
  }

  render(): void {
    this.root.replaceChildren(
      renderApp(
        this.state,
        (verdict) => void this.submitVerdict(verdict),
        this.inspected,
        (triple) => this.inspect(triple),
      ),
    );
  }

  /** Render output with the session id factored out, for replay checks. */
  snapshotHtml(): string {
    return this.root.innerHTML.split(this.state.sessionId).join('<session>');
  }
}

/** Browser entry point: resume from the URL hash or show a start form. */
export async function bootstrap(
  root: HTMLElement,
  client: ServiceClient,
  hash: string = globalThis.location?.hash ?? '',
): Promise<App | null> {
  const match = /#s=([0-9a-f]+)/.exec(hash);
  if (match && match[1]) {
    const app = await App.resume(root, client, match[1]);
    return app;
  }
  renderStartForm(root, client);
  return null;
}

function renderStartForm(root: HTMLElement, client: ServiceClient): void {
  const input = document.createElement('textarea');
  input.setAttribute('class', 'labels-input');
  input.setAttribute('placeholder', 'One alternative per line (2-50)');
  const button = document.createElement('button');
  button.textContent = 'Start session';
  const error = document.createElement('div');
  error.setAttribute('class', 'error');
  button.addEventListener('click', () => {
    const labels = input.value
      .split('\n')
      .map((s) => s.trim())
      .filter(Boolean);
    App.create(root, client, labels)
      .then((app) => {
        if (globalThis.location) globalThis.location.hash = `#s=${app.sessionId}`;
      })
      .catch((err) => {
        error.textContent = err instanceof Error ? err.message : String(err);
      });
  });
  const form = document.createElement('section');
  form.setAttribute('class', 'start-form');
  form.append(input, button, error);
  root.replaceChildren(form);
}
