/** Split a text into plain/highlighted segments from character spans.
 *
 * Spans come from the server (lemma-indel words); they are clamped to
 * the text, sorted, and overlapping or touching spans are merged, so
 * the returned segments always partition the input exactly.
 */

import type { HighlightSpan } from "./types.js";

export interface TextSegment {
  text: string;
  highlighted: boolean;
}

export function segmentText(text: string, spans: HighlightSpan[]): TextSegment[] {
  const clamped = spans
    .map(([start, end]): HighlightSpan => [
      Math.max(0, Math.min(start, text.length)),
      Math.max(0, Math.min(end, text.length)),
    ])
    .filter(([start, end]) => start < end)
    .sort((a, b) => a[0] - b[0] || a[1] - b[1]);

  const merged: HighlightSpan[] = [];
  for (const [start, end] of clamped) {
    const last = merged[merged.length - 1];
    if (last && start <= last[1]) {
      last[1] = Math.max(last[1], end);
    } else {
      merged.push([start, end]);
    }
  }

  const segments: TextSegment[] = [];
  let cursor = 0;
  for (const [start, end] of merged) {
    if (cursor < start) {
      segments.push({ text: text.slice(cursor, start), highlighted: false });
    }
    segments.push({ text: text.slice(start, end), highlighted: true });
    cursor = end;
  }
  if (cursor < text.length) {
    segments.push({ text: text.slice(cursor), highlighted: false });
  }
  return segments;
}
