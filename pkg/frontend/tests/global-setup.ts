/**
 * Boots the real Python service once for the test run, so the UI tests go
 * through the genuine HTTP interface instead of a re-implemented stub.
 */
import { spawn, type ChildProcess } from 'node:child_process';

import { SERVICE_URL } from './service-url.js';

const PY_SCRIPT =
  "from pcties.service import create_app; import uvicorn; " +
  `uvicorn.run(create_app(), host='127.0.0.1', port=${new URL(SERVICE_URL).port}, log_level='warning')`;

async function waitForHealth(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${SERVICE_URL}/health`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 150));
  }
  throw new Error(`service did not come up at ${SERVICE_URL} within ${timeoutMs} ms`);
}

let proc: ChildProcess | null = null;

export default async function setup(): Promise<() => Promise<void>> {
  proc = spawn('python3', ['-c', PY_SCRIPT], { stdio: ['ignore', 'inherit', 'inherit'] });
  await waitForHealth(30_000);
  return async () => {
    proc?.kill('SIGTERM');
    await new Promise((r) => setTimeout(r, 200));
    proc?.kill('SIGKILL');
  };
}
