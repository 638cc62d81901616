"""HTTP API for the annotation workflow, consumed by the web UI.

Endpoints (JSON):

* ``GET  /api/next``            next unannotated sample item or a completion notice
* ``GET  /api/pairs/{pair_id}`` pair detail: texts, parses, diagnostics
* ``POST /api/annotations``     record one annotation
* ``GET  /api/frequencies``     live category frequency table

Static UI assets are served from an optional directory at ``/``.
Writes all funnel through the store's internal lock.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .annotation import (
    AnnotationRecord,
    AnnotationStore,
    ManualCategory,
    category_frequencies,
    utc_now,
)
from .classify import classify
from .corpus import ParaphrasePair, ParsedSegment
from .indels import DEFAULT_FUNCTIONAL, FunctionalRelations, comparison_lemma, lemma_indel
from .synonymy import SynonymLexicon

LOCAL_ORIGIN_REGEX = r"https?://(localhost|127\.0\.0\.1)(:\d+)?"


def token_rows(segment: ParsedSegment) -> list[dict]:
    rows = []
    for token in segment.tokens:
        rows.append(
            {
                "index": token.index,
                "surface": token.surface,
                "lemma": token.lemma,
                "upos": token.upos,
                "deprel": token.deprel,
            }
        )
    return rows


def highlight_spans(segment: ParsedSegment, indel_lemmas) -> list[list[int]]:
    """Character ranges of this side's indel words in the segment text.

    For a lemma with n indel occurrences, the first n occurrences among
    the side's non-punctuation tokens are highlighted.  Tokens whose
    surface cannot be located in the text (unusual tokenization) are
    skipped, so every returned span is a valid range.
    """
    text = segment.text
    remaining = dict(indel_lemmas)
    spans = []
    cursor = 0
    for token in segment.tokens:
        start = text.find(token.surface, cursor)
        if start == -1:
            continue
        end = start + len(token.surface)
        cursor = end
        if token.is_punctuation:
            continue
        lemma = comparison_lemma(token)
        if remaining.get(lemma, 0) > 0:
            remaining[lemma] -= 1
            spans.append([start, end])
    return spans


class AnnotationService:
    """Bundles the corpus, sample, store and diagnostics configuration."""

    def __init__(
        self,
        pairs: Sequence[ParaphrasePair],
        store: AnnotationStore,
        lexicon: SynonymLexicon,
        funcs: FunctionalRelations = DEFAULT_FUNCTIONAL,
    ):
        self.pairs = {p.id: p for p in pairs}
        self.store = store
        self.lexicon = lexicon
        self.funcs = funcs
        missing = [pid for pid in store.sample_ids if pid not in self.pairs]
        if missing:
            raise ValueError(f"sample references unknown pairs: {missing[:5]}")

    def pair_view(self, pair_id: str) -> dict:
        pair = self.pairs[pair_id]
        indel = lemma_indel(pair, content_only=False, funcs=self.funcs)
        current = self.store.record_for(pair_id)
        return {
            "pair_id": pair.id,
            "label": str(pair.label),
            "side1_text": pair.side1.text,
            "side2_text": pair.side2.text,
            "side1_tokens": token_rows(pair.side1),
            "side2_tokens": token_rows(pair.side2),
            "side1_highlights": highlight_spans(pair.side1, indel.only_in_side1),
            "side2_highlights": highlight_spans(pair.side2, indel.only_in_side2),
            "diagnostics": {
                "indel_count": indel.size,
                "only_in_side1": sorted(indel.only_in_side1.elements()),
                "only_in_side2": sorted(indel.only_in_side2.elements()),
                "variation_class": classify(pair, self.lexicon, self.funcs).value,
            },
            "current_annotation": (
                sorted(c.value for c in current.categories) if current else None
            ),
        }

    def progress(self) -> dict:
        done = self.store.annotated_pair_ids()
        total = len(self.store.sample_ids)
        annotated = sum(1 for pid in self.store.sample_ids if pid in done)
        return {"annotated": annotated, "total": total}


class AnnotationPayload(BaseModel):
    pair_id: str
    categories: list[str]
    annotator: str = "default"


def create_app(
    service: AnnotationService, static_dir: Optional[str | Path] = None
) -> FastAPI:
    app = FastAPI(title="paravar annotation service")
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=LOCAL_ORIGIN_REGEX,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/next")
    def next_item():
        pair_id = service.store.next_unannotated()
        if pair_id is None:
            return {"done": True, "pair": None, "progress": service.progress()}
        return {
            "done": False,
            "pair": service.pair_view(pair_id),
            "progress": service.progress(),
        }

    @app.get("/api/pairs/{pair_id}")
    def pair_detail(pair_id: str):
        if pair_id not in service.pairs:
            raise HTTPException(status_code=404, detail=f"unknown pair {pair_id!r}")
        return service.pair_view(pair_id)

    @app.post("/api/annotations")
    def post_annotation(payload: AnnotationPayload):
        if not payload.categories:
            raise HTTPException(status_code=422, detail="categories must be non-empty")
        try:
            categories = frozenset(ManualCategory(c) for c in payload.categories)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        if payload.pair_id not in set(service.store.sample_ids):
            raise HTTPException(
                status_code=404,
                detail=f"pair {payload.pair_id!r} is not in the active sample",
            )
        record = AnnotationRecord(
            pair_id=payload.pair_id,
            categories=categories,
            annotator=payload.annotator,
            timestamp=utc_now(),
        )
        service.store.record_annotation(record)
        return {"ok": True, "progress": service.progress()}

    @app.get("/api/frequencies")
    def frequencies():
        records = service.store.records()
        return {
            "total_records": len(records),
            "total_assignments": sum(len(r.categories) for r in records),
            "rows": [
                {"category": f.category.value, "count": f.count, "ratio": f.ratio}
                for f in category_frequencies(service.store)
            ],
        }

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
