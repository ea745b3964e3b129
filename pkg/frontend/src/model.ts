/** Pure annotation state: selected scores, completeness, averages, drafts.
 *
 * Everything the server would reject is rejected here first, so the UI can
 * never build an invalid judgment (ten integer scores, each 0-4).
 */

import type { JudgmentPayload, Task } from "./api.js";

export const PARAMETER_COUNT = 10;
export const MAX_SCORE = 4;

export class TaskScores {
  private values: (number | null)[] = new Array(PARAMETER_COUNT).fill(null);

  setScore(row: number, value: number): void {
    if (!Number.isInteger(row) || row < 0 || row >= PARAMETER_COUNT) {
      throw new RangeError(`parameter row out of range: ${row}`);
    }
    if (!Number.isInteger(value) || value < 0 || value > MAX_SCORE) {
      throw new RangeError(`score out of range 0..${MAX_SCORE}: ${value}`);
    }
    this.values[row] = value;
  }

  getScore(row: number): number | null {
    return this.values[row] ?? null;
  }

  selectedCount(): number {
    return this.values.filter((v) => v !== null).length;
  }

  isComplete(): boolean {
    return this.selectedCount() === PARAMETER_COUNT;
  }

  /** Mean of the scores selected so far; null before any selection. */
  average(): number | null {
    const selected = this.values.filter((v): v is number => v !== null);
    if (selected.length === 0) {
      return null;
    }
    return selected.reduce((total, v) => total + v, 0) / selected.length;
  }

  /** The running average as shown to the annotator, to one decimal. */
  averageDisplay(): string {
    const avg = this.average();
    return avg === null ? "–" : avg.toFixed(1);
  }

  toArray(): number[] {
    if (!this.isComplete()) {
      throw new Error("cannot export an incomplete judgment");
    }
    return this.values.slice() as number[];
  }

  snapshot(): (number | null)[] {
    return this.values.slice();
  }

  restore(values: (number | null)[]): void {
    if (values.length !== PARAMETER_COUNT) {
      return; // stale or foreign draft: ignore rather than corrupt state
    }
    const clean = new Array<number | null>(PARAMETER_COUNT).fill(null);
    for (let row = 0; row < PARAMETER_COUNT; row++) {
      const value = values[row];
      if (
        typeof value === "number" &&
        Number.isInteger(value) &&
        value >= 0 &&
        value <= MAX_SCORE
      ) {
        clean[row] = value;
      }
    }
    this.values = clean;
  }

  clear(): void {
    this.values = new Array(PARAMETER_COUNT).fill(null);
  }
}

export function buildJudgment(
  task: Task,
  annotator: string,
  scores: TaskScores,
  now: () => Date = () => new Date(),
): JudgmentPayload {
  return {
    segment_id: task.segment_id,
    system: task.system,
    annotator,
    scores: scores.toArray(),
    timestamp: now().toISOString(),
  };
}

/** Unsubmitted work, keyed per (annotator, segment, system). */
export interface DraftStore {
  save(key: string, values: (number | null)[]): void;
  load(key: string): (number | null)[] | null;
  clear(key: string): void;
}

export function draftKey(annotator: string, task: Task): string {
  return `mteval-draft:${annotator}:${task.segment_id}:${task.system}`;
}

export class StorageDraftStore implements DraftStore {
  constructor(private readonly storage: Storage) {}

  save(key: string, values: (number | null)[]): void {
    this.storage.setItem(key, JSON.stringify(values));
  }

  load(key: string): (number | null)[] | null {
    const raw = this.storage.getItem(key);
    if (raw === null) {
      return null;
    }
    try {
      const parsed = JSON.parse(raw) as unknown;
      return Array.isArray(parsed) ? (parsed as (number | null)[]) : null;
    } catch {
      return null;
    }
  }

  clear(key: string): void {
    this.storage.removeItem(key);
  }
}

export class MemoryDraftStore implements DraftStore {
  private drafts = new Map<string, (number | null)[]>();

  save(key: string, values: (number | null)[]): void {
    this.drafts.set(key, values.slice());
  }

  load(key: string): (number | null)[] | null {
    return this.drafts.get(key)?.slice() ?? null;
  }

  clear(key: string): void {
    this.drafts.delete(key);
  }
}
