/** Session flow: fetch task -> collect scores -> submit -> advance.
 *
 * Drafts are written on every score change and only cleared after the
 * server's 201, so neither a crashed tab nor a failed submit loses work.
 */

import {
  ApiClient,
  NetworkError,
  type ParameterInfo,
  type Task,
} from "./api.js";
import {
  PARAMETER_COUNT,
  TaskScores,
  buildJudgment,
  draftKey,
  type DraftStore,
} from "./model.js";
import { render, type ViewCallbacks, type ViewState } from "./view.js";

export class AnnotationController {
  private labels: ParameterInfo | null = null;
  private task: Task | null = null;
  private scores = new TaskScores();
  private focusRow = 0;
  private submitting = false;
  private fieldError: { field: string; message: string } | null = null;
  private duplicate: string | null = null;
  private retry: string | null = null;
  private startupError: string | null = null;
  private finished = false;

  private readonly callbacks: ViewCallbacks = {
    onScore: (row, value) => this.handleScore(row, value),
    onSubmit: () => void this.handleSubmit(),
    onRetry: () => void this.handleRetry(),
    onSkip: () => void this.handleSkip(),
  };

  constructor(
    private readonly api: ApiClient,
    private readonly drafts: DraftStore,
    private readonly root: HTMLElement,
    private readonly annotator: string,
    private readonly now: () => Date = () => new Date(),
  ) {}

  async start(): Promise<void> {
    this.render({ kind: "loading" });
    try {
      const labels = await this.api.fetchParameters();
      if (labels.parameters.length !== PARAMETER_COUNT) {
        throw new Error(
          `expected ${PARAMETER_COUNT} parameters, got ${labels.parameters.length}`,
        );
      }
      this.labels = labels;
      await this.loadNext();
    } catch (error) {
      this.startupError = describe(error);
      this.render({ kind: "retry-start", message: this.startupError });
    }
  }

  private async loadNext(): Promise<void> {
    const task = await this.api.fetchNextTask(this.annotator);
    this.task = task;
    this.fieldError = null;
    this.duplicate = null;
    this.retry = null;
    this.submitting = false;
    this.focusRow = 0;
    this.scores = new TaskScores();
    if (task === null) {
      this.finished = true;
      this.render({ kind: "done" });
      return;
    }
    const draft = this.drafts.load(draftKey(this.annotator, task));
    if (draft !== null) {
      this.scores.restore(draft);
    }
    this.renderTask();
  }

  private handleScore(row: number, value: number): void {
    if (this.task === null) {
      return;
    }
    this.scores.setScore(row, value);
    this.drafts.save(draftKey(this.annotator, this.task), this.scores.snapshot());
    this.fieldError = null;
    this.focusRow = Math.min(row + 1, PARAMETER_COUNT - 1);
    this.renderTask();
  }

  private async handleSubmit(): Promise<void> {
    if (this.task === null || !this.scores.isComplete() || this.submitting) {
      return;
    }
    this.submitting = true;
    this.renderTask();
    const payload = buildJudgment(this.task, this.annotator, this.scores, this.now);
    try {
      const result = await this.api.submitJudgment(payload);
      if (result.kind === "stored") {
        this.drafts.clear(draftKey(this.annotator, this.task));
        this.task = null;
        await this.advance();
        return;
      }
      this.submitting = false;
      if (result.kind === "duplicate") {
        this.duplicate = result.message;
      } else {
        this.fieldError = { field: result.field, message: result.message };
      }
      this.renderTask();
    } catch (error) {
      // draft is already persisted; surface a retry banner, lose nothing
      this.submitting = false;
      this.retry = error instanceof NetworkError
        ? "The service is unreachable. Your scores are saved locally."
        : describe(error);
      this.renderTask();
    }
  }

  /** Load the next task, degrading to a retryable banner on failure. */
  private async advance(): Promise<void> {
    try {
      await this.loadNext();
    } catch (error) {
      this.render({ kind: "retry-start", message: describe(error) });
    }
  }

  private async handleRetry(): Promise<void> {
    if (this.labels === null) {
      this.startupError = null;
      await this.start();
      return;
    }
    if (this.task === null) {
      // judged work is safe on the server; only the next fetch failed
      await this.advance();
      return;
    }
    this.retry = null;
    await this.handleSubmit();
  }

  private async handleSkip(): Promise<void> {
    if (this.task !== null) {
      // the server already holds a judgment for this pair; drop the draft
      this.drafts.clear(draftKey(this.annotator, this.task));
      this.task = null;
    }
    await this.advance();
  }

  private renderTask(): void {
    if (this.task === null || this.labels === null) {
      return;
    }
    this.render({
      kind: "task",
      task: this.task,
      labels: this.labels,
      scores: this.scores,
      focusRow: this.focusRow,
      submitting: this.submitting,
      fieldError: this.fieldError,
      duplicate: this.duplicate,
      retry: this.retry,
    });
  }

  private render(state: ViewState): void {
    render(this.root, state, this.callbacks);
  }

  isFinished(): boolean {
    return this.finished;
  }

  currentTask(): Task | null {
    return this.task;
  }

  currentAverageDisplay(): string {
    return this.scores.averageDisplay();
  }
}

function describe(error: unknown): string {
  return error instanceof Error ? error.message : String(error);
}
