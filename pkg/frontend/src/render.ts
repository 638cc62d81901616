/** DOM rendering of the session view; all state lives in the session. */

import { CATEGORIES } from "./categories.js";
import { segmentText } from "./highlight.js";
import type { SessionView } from "./state.js";
import type { HighlightSpan, PairView, TokenRow } from "./types.js";

export interface Handlers {
  onToggle(value: string): void;
  onSubmit(): void;
  onRetry(): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderSideText(text: string, spans: HighlightSpan[]): HTMLElement {
  const container = el("p", "side-text");
  for (const segment of segmentText(text, spans)) {
    const span = el("span", segment.highlighted ? "indel" : undefined, segment.text);
    container.appendChild(span);
  }
  return container;
}

function renderTokenTable(tokens: TokenRow[]): HTMLElement {
  const table = el("table", "tokens");
  const head = el("tr");
  for (const column of ["#", "surface", "lemma", "upos", "deprel"]) {
    head.appendChild(el("th", undefined, column));
  }
  table.appendChild(head);
  for (const token of tokens) {
    const row = el("tr");
    row.appendChild(el("td", undefined, String(token.index)));
    row.appendChild(el("td", undefined, token.surface));
    row.appendChild(el("td", undefined, token.lemma));
    row.appendChild(el("td", undefined, token.upos));
    row.appendChild(el("td", undefined, token.deprel));
    table.appendChild(row);
  }
  return table;
}

function renderPair(pair: PairView): HTMLElement {
  const section = el("section", "pair");
  const header = el("div", "pair-header");
  header.appendChild(el("h2", undefined, pair.pair_id));
  header.appendChild(el("span", "pair-label", `label ${pair.label}`));
  header.appendChild(
    el("span", "pair-class", `auto: ${pair.diagnostics.variation_class}`),
  );
  section.appendChild(header);

  const sides = el("div", "sides");
  const views: Array<[string, HighlightSpan[], TokenRow[]]> = [
    [pair.side1_text, pair.side1_highlights, pair.side1_tokens],
    [pair.side2_text, pair.side2_highlights, pair.side2_tokens],
  ];
  views.forEach(([text, spans, tokens], i) => {
    const side = el("div", "side");
    side.appendChild(el("h3", undefined, `Translation ${i + 1}`));
    side.appendChild(renderSideText(text, spans));
    side.appendChild(renderTokenTable(tokens));
    sides.appendChild(side);
  });
  section.appendChild(sides);

  const diag = el("p", "diagnostics");
  diag.textContent =
    `${pair.diagnostics.indel_count} lemma indels — ` +
    `side 1: ${pair.diagnostics.only_in_side1.join(", ") || "(none)"} · ` +
    `side 2: ${pair.diagnostics.only_in_side2.join(", ") || "(none)"}`;
  section.appendChild(diag);
  return section;
}

function renderCategories(view: SessionView, handlers: Handlers): HTMLElement {
  const list = el("ol", "categories");
  CATEGORIES.forEach((category, i) => {
    const item = el("li");
    const button = el("button", view.selected.has(category.value) ? "on" : undefined);
    button.type = "button";
    button.disabled = view.phase !== "annotating" || view.pending;
    button.appendChild(el("kbd", undefined, String(i + 1)));
    button.appendChild(el("strong", undefined, category.label));
    button.appendChild(el("small", undefined, category.hint));
    button.addEventListener("click", () => handlers.onToggle(category.value));
    item.appendChild(button);
    list.appendChild(item);
  });
  return list;
}

function renderFrequencies(view: SessionView): HTMLElement {
  const panel = el("aside", "frequencies");
  panel.appendChild(el("h3", undefined, "Session frequencies"));
  if (!view.frequencies) {
    panel.appendChild(el("p", "muted", "not available"));
    return panel;
  }
  const labels = new Map(CATEGORIES.map((c) => [c.value, c.label]));
  const table = el("table");
  for (const row of view.frequencies.rows) {
    const tr = el("tr");
    tr.appendChild(el("td", undefined, labels.get(row.category) ?? row.category));
    tr.appendChild(el("td", "num", String(row.count)));
    tr.appendChild(el("td", "num", `${Math.round(row.ratio * 100)}%`));
    table.appendChild(tr);
  }
  panel.appendChild(table);
  panel.appendChild(
    el("p", "muted", `${view.frequencies.total_records} pairs annotated`),
  );
  return panel;
}

export function render(root: HTMLElement, view: SessionView, handlers: Handlers): void {
  root.replaceChildren();

  const status = el("div", "status");
  if (view.progress) {
    status.appendChild(
      el("span", undefined, `${view.progress.annotated} / ${view.progress.total} annotated`),
    );
  }
  root.appendChild(status);

  if (view.error) {
    const banner = el("div", "error");
    banner.appendChild(el("span", undefined, view.error));
    const retry = el("button", undefined, "Retry");
    retry.type = "button";
    retry.addEventListener("click", () => handlers.onRetry());
    banner.appendChild(retry);
    root.appendChild(banner);
  }

  const main = el("div", "main");
  if (view.phase === "loading") {
    main.appendChild(el("p", "muted", "loading…"));
  } else if (view.phase === "done") {
    main.appendChild(el("h2", undefined, "All sampled pairs are annotated."));
  } else if (view.pair) {
    main.appendChild(renderPair(view.pair));
    main.appendChild(renderCategories(view, handlers));
    const submit = el("button", "submit");
    submit.type = "button";
    submit.textContent = view.pending ? "Submitting…" : "Submit (Enter)";
    submit.disabled =
      view.phase !== "annotating" || view.pending || view.selected.size === 0;
    submit.addEventListener("click", () => handlers.onSubmit());
    main.appendChild(submit);
  }
  root.appendChild(main);
  root.appendChild(renderFrequencies(view));
}
