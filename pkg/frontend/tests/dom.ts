/** Minimal DOM bootstrap: tests run in the node environment (keeping
 * node's fetch for the live service) with a jsdom document. */
import { JSDOM } from 'jsdom';

export function installDom(): HTMLElement {
  const dom = new JSDOM('<!doctype html><html><body><div id="root"></div></body></html>');
  const g = globalThis as Record<string, unknown>;
  g.document = dom.window.document;
  g.HTMLElement = dom.window.HTMLElement;
  g.SVGElement = dom.window.SVGElement;
  return dom.window.document.getElementById('root') as HTMLElement;
}
