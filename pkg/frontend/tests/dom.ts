/** Shared happy-dom scaffolding for tests that render the real view. */

import { Window } from "happy-dom";

export function mountDom(): { window: Window; root: HTMLElement } {
  const window = new Window({ url: "http://127.0.0.1/" });
  (globalThis as Record<string, unknown>).window = window;
  (globalThis as Record<string, unknown>).document = window.document;
  const root = window.document.createElement("main");
  window.document.body.appendChild(root);
  return { window, root: root as unknown as HTMLElement };
}

export const SCALE = [
  "Not Acceptable (0)",
  "Partially Acceptable (1)",
  "Acceptable (2)",
  "Perfect (3)",
  "Ideal (4)",
];

export const PARAMETERS = [
  "Translation of gender and number of the nouns",
  "Translation of tense in the source sentence",
  "Translation of voice in the source sentence",
  "Identification of the proper nouns",
  "Use of adjectives and adverbs corresponding to the nouns and verbs in the source sentence",
  "Selection of proper words/synonyms",
  "The sequence of noun, helping verb and verb in the translation",
  "Use of punctuation signs in the translation",
  "Maintaining the stress on the significant part of the source sentence in the translation",
  "Maintaining the semantics of the source sentence in the translation",
];

export async function settle(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0));
}

export async function waitFor(
  predicate: () => boolean,
  timeoutMs = 5000,
): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (!predicate()) {
    if (Date.now() > deadline) {
      throw new Error("timed out waiting for condition");
    }
    await new Promise((resolve) => setTimeout(resolve, 10));
  }
}

export function pressKey(window: Window, element: Element, key: string): void {
  const event = new window.KeyboardEvent("keydown", { key, bubbles: true });
  element.dispatchEvent(event as unknown as Event);
}

export function clickRadio(root: HTMLElement, row: number, value: number): void {
  const input = root.querySelector<HTMLInputElement>(
    `input[name="param-${row}"][value="${value}"]`,
  );
  if (input === null) {
    throw new Error(`no radio for row ${row} value ${value}`);
  }
  input.click();
}
