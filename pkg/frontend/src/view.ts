/** DOM rendering. The real system identity stays in memory; only the
 * blinded label is ever written into the document. */

import type { ParameterInfo, Task } from "./api.js";
import { PARAMETER_COUNT, type TaskScores } from "./model.js";

export type ViewState =
  | { kind: "loading" }
  | {
      kind: "task";
      task: Task;
      labels: ParameterInfo;
      scores: TaskScores;
      focusRow: number;
      submitting: boolean;
      fieldError: { field: string; message: string } | null;
      duplicate: string | null;
      retry: string | null;
    }
  | { kind: "retry-start"; message: string }
  | { kind: "done" };

export interface ViewCallbacks {
  onScore(row: number, value: number): void;
  onSubmit(): void;
  onRetry(): void;
  onSkip(): void;
}

export function render(root: HTMLElement, state: ViewState, callbacks: ViewCallbacks): void {
  root.textContent = "";
  switch (state.kind) {
    case "loading":
      root.appendChild(el("p", { id: "loading" }, "Loading…"));
      return;
    case "retry-start":
      root.appendChild(renderRetryBanner(state.message, callbacks));
      return;
    case "done":
      root.appendChild(renderDone());
      return;
    case "task":
      renderTask(root, state, callbacks);
      return;
  }
}

function renderDone(): HTMLElement {
  const box = el("div", { id: "done-screen", class: "card" });
  box.appendChild(el("h2", {}, "All done"));
  box.appendChild(
    el("p", {}, "Every output assigned to you has been judged. Thank you."),
  );
  return box;
}

function renderRetryBanner(message: string, callbacks: ViewCallbacks): HTMLElement {
  const banner = el("div", { id: "retry-banner", class: "banner" });
  banner.appendChild(el("span", {}, message));
  const button = el("button", { id: "retry-button" }, "Retry");
  button.addEventListener("click", () => callbacks.onRetry());
  banner.appendChild(button);
  return banner;
}

function renderTask(
  root: HTMLElement,
  state: Extract<ViewState, { kind: "task" }>,
  callbacks: ViewCallbacks,
): void {
  const { task, labels, scores } = state;

  if (state.retry !== null) {
    root.appendChild(renderRetryBanner(state.retry, callbacks));
  }
  if (state.duplicate !== null) {
    const prompt = el("div", { id: "duplicate-prompt", class: "banner" });
    prompt.appendChild(
      el("span", {}, "This output was already judged. Skip forward?"),
    );
    const skip = el("button", { id: "skip-button" }, "Skip to next task");
    skip.addEventListener("click", () => callbacks.onSkip());
    prompt.appendChild(skip);
    root.appendChild(prompt);
  }

  const header = el("div", { class: "card" });
  header.appendChild(
    el("p", { id: "progress" }, `Task ${task.done + 1} of ${task.total}`),
  );
  header.appendChild(el("h2", {}, `Segment ${task.segment_id}`));
  header.appendChild(el("h3", {}, "Source"));
  header.appendChild(el("p", { id: "source-text" }, task.source_text));
  header.appendChild(el("h3", { id: "blinded-label" }, task.blinded_label));
  header.appendChild(el("p", { id: "hypothesis-text" }, task.hypothesis_text));
  root.appendChild(header);

  const form = el("div", { class: "card" });
  form.appendChild(
    el("p", { class: "hint" },
       "Rate each parameter; keys 0–4 score the highlighted row."),
  );
  const table = el("table", { id: "parameter-table" });
  const head = el("tr", {});
  head.appendChild(el("th", {}, "Parameter"));
  for (const scaleLabel of labels.scale) {
    head.appendChild(el("th", { class: "scale-head" }, scaleLabel));
  }
  table.appendChild(head);

  labels.parameters.forEach((parameterLabel, row) => {
    const tr = el("tr", {
      class: "param-row" + (row === state.focusRow ? " focused" : ""),
      "data-row": String(row),
      tabindex: "0",
    });
    tr.appendChild(el("td", { class: "param-label" }, `${row + 1}. ${parameterLabel}`));
    for (let value = 0; value < labels.scale.length; value++) {
      const cell = el("td", { class: "choice" });
      const input = el("input", {
        type: "radio",
        name: `param-${row}`,
        value: String(value),
        "aria-label": labels.scale[value] ?? String(value),
      }) as HTMLInputElement;
      if (scores.getScore(row) === value) {
        input.checked = true;
      }
      input.addEventListener("change", () => callbacks.onScore(row, value));
      cell.appendChild(input);
      tr.appendChild(cell);
    }
    tr.addEventListener("keydown", (event) => {
      const key = (event as KeyboardEvent).key;
      if (key >= "0" && key <= "4") {
        callbacks.onScore(row, Number(key));
        event.preventDefault();
      }
    });
    table.appendChild(tr);
  });
  form.appendChild(table);

  if (state.fieldError !== null) {
    form.appendChild(
      el("p", { id: "field-error", class: "error" },
         `${state.fieldError.field}: ${state.fieldError.message}`),
    );
  }

  const footer = el("div", { class: "footer" });
  footer.appendChild(el("span", {}, "Running average: "));
  footer.appendChild(el("strong", { id: "average-display" }, scores.averageDisplay()));
  footer.appendChild(
    el("span", { id: "selected-count", class: "hint" },
       ` (${scores.selectedCount()}/${PARAMETER_COUNT} rated)`),
  );
  const submit = el("button", { id: "submit-button" }, "Submit judgment") as HTMLButtonElement;
  submit.disabled = !scores.isComplete() || state.submitting;
  submit.addEventListener("click", () => callbacks.onSubmit());
  footer.appendChild(submit);
  form.appendChild(footer);
  root.appendChild(form);

  const focused = root.querySelector<HTMLElement>(`tr[data-row="${state.focusRow}"]`);
  focused?.focus();
}

function el(
  tag: string,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElement {
  const node = document.createElement(tag);
  for (const [name, value] of Object.entries(attrs)) {
    node.setAttribute(name, value);
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}
