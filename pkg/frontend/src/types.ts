/** Wire types of the annotation service's JSON API. */

export interface TokenRow {
  index: number;
  surface: string;
  lemma: string;
  upos: string;
  deprel: string;
}

export interface Diagnostics {
  indel_count: number;
  only_in_side1: string[];
  only_in_side2: string[];
  variation_class: string;
}

export type HighlightSpan = [number, number];

export interface PairView {
  pair_id: string;
  label: string;
  side1_text: string;
  side2_text: string;
  side1_tokens: TokenRow[];
  side2_tokens: TokenRow[];
  side1_highlights: HighlightSpan[];
  side2_highlights: HighlightSpan[];
  diagnostics: Diagnostics;
  current_annotation: string[] | null;
}

export interface Progress {
  annotated: number;
  total: number;
}

export interface NextResponse {
  done: boolean;
  pair: PairView | null;
  progress: Progress;
}

export interface FrequencyRow {
  category: string;
  count: number;
  ratio: number;
}

export interface FrequenciesResponse {
  total_records: number;
  total_assignments: number;
  rows: FrequencyRow[];
}

export interface SubmitResponse {
  ok: boolean;
  progress: Progress;
}
