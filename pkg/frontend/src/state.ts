/** Annotation session state machine.
 *
 * One pair on screen at a time; digits toggle a category selection,
 * submit posts it and advances. At most one submission is in flight
 * (the UI disables submit while pending), every displayed count comes
 * from the server's frequencies response, and errors are shown and
 * left for the user to retry explicitly.
 */

import { isCategoryValue } from "./categories.js";
import type {
  FrequenciesResponse,
  NextResponse,
  PairView,
  Progress,
  SubmitResponse,
} from "./types.js";

/** The slice of the API the session needs; ApiClient satisfies it. */
export interface AnnotationApi {
  fetchNext(): Promise<NextResponse>;
  submitAnnotation(
    pairId: string,
    categories: string[],
    annotator?: string,
  ): Promise<SubmitResponse>;
  fetchFrequencies(): Promise<FrequenciesResponse>;
}

export type Phase = "loading" | "annotating" | "done" | "error";

export interface SessionView {
  phase: Phase;
  pair: PairView | null;
  selected: ReadonlySet<string>;
  pending: boolean;
  error: string | null;
  progress: Progress | null;
  frequencies: FrequenciesResponse | null;
}

export class AnnotationSession {
  private readonly api: AnnotationApi;
  private readonly onChange: (view: SessionView) => void;
  private readonly annotator: string;

  private phase: Phase = "loading";
  private pair: PairView | null = null;
  private selected = new Set<string>();
  private pending = false;
  private error: string | null = null;
  private progress: Progress | null = null;
  private frequencies: FrequenciesResponse | null = null;

  constructor(
    api: AnnotationApi,
    onChange: (view: SessionView) => void,
    annotator = "default",
  ) {
    this.api = api;
    this.onChange = onChange;
    this.annotator = annotator;
  }

  view(): SessionView {
    return {
      phase: this.phase,
      pair: this.pair,
      selected: new Set(this.selected),
      pending: this.pending,
      error: this.error,
      progress: this.progress,
      frequencies: this.frequencies,
    };
  }

  private notify(): void {
    this.onChange(this.view());
  }

  async start(): Promise<void> {
    await Promise.all([this.loadNext(), this.refreshFrequencies()]);
  }

  async loadNext(): Promise<void> {
    this.phase = "loading";
    this.error = null;
    this.notify();
    try {
      const next = await this.api.fetchNext();
      this.progress = next.progress;
      if (next.done || next.pair === null) {
        this.phase = "done";
        this.pair = null;
        this.selected = new Set();
      } else {
        this.phase = "annotating";
        this.pair = next.pair;
        this.selected = new Set(
          (next.pair.current_annotation ?? []).filter(isCategoryValue),
        );
      }
    } catch (err) {
      this.phase = "error";
      this.error = err instanceof Error ? err.message : String(err);
    }
    this.notify();
  }

  async refreshFrequencies(): Promise<void> {
    try {
      this.frequencies = await this.api.fetchFrequencies();
    } catch {
      // the pair view stays usable; the panel shows stale data at worst
      this.frequencies = null;
    }
    this.notify();
  }

  toggle(value: string): void {
    if (this.phase !== "annotating" || this.pending || !isCategoryValue(value)) {
      return;
    }
    if (this.selected.has(value)) {
      this.selected.delete(value);
    } else {
      this.selected.add(value);
    }
    this.notify();
  }

  isSelected(value: string): boolean {
    return this.selected.has(value);
  }

  canSubmit(): boolean {
    return (
      this.phase === "annotating" &&
      !this.pending &&
      this.pair !== null &&
      this.selected.size > 0
    );
  }

  async submit(): Promise<void> {
    if (!this.canSubmit() || this.pair === null) {
      return;
    }
    this.pending = true;
    this.error = null;
    this.notify();
    try {
      await this.api.submitAnnotation(
        this.pair.pair_id,
        Array.from(this.selected).sort(),
        this.annotator,
      );
      this.pending = false;
      await Promise.all([this.loadNext(), this.refreshFrequencies()]);
    } catch (err) {
      // keep the pair and selection so the user can retry
      this.pending = false;
      this.error = err instanceof Error ? err.message : String(err);
      this.notify();
    }
  }
}
