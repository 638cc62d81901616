"""Command-line entry point orchestrating all analyses.

Subcommands: classify, stats, pivot, sample, serve, report.  Options
come from a TOML config file plus flag overrides; flags win.  Exit
codes: 0 success, 2 input/configuration error, 70 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib

from .annotation import AnnotationStore, sample_unexplained
from .classify import CLASS_ORDER, DEFAULT_CASCADE, classify_corpus
from .corpus import LabelGroup, group_label, load_corpus, label_distribution
from .errors import InputError
from .indels import DEFAULT_FUNCTIONAL, FunctionalRelations
from .pivot import build_index_from_files, match_pairs
from .reports import build_meta, format_ratio, write_csv, write_histogram_svg, write_json
from .stats import (
    accounting_rates,
    indel_histogram,
    mean_token_length,
    nonelementary_proportion,
    overrepresentation,
)
from .synonymy import (
    EmbeddingTable,
    SynonymLexicon,
    build_lexicon,
    load_embeddings,
    load_wordnet_pairs,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 70

_GROUPS = {g.value: g for g in LabelGroup}


@dataclass
class RunConfig:
    """Resolved configuration of one CLI invocation."""

    manifest: Optional[str] = None
    conllu: Optional[str] = None
    embeddings: Optional[str] = None
    wordnet: Optional[str] = None
    parallel_source: Optional[str] = None
    parallel_target: Optional[str] = None
    source_text: Optional[str] = None
    annotations: str = "annotations.jsonl"
    sample_file: str = "sample.json"
    frontend: Optional[str] = None
    output_dir: str = "reports"
    k: int = 15
    min_total: int = 50
    top_n: Optional[int] = None
    functional_relations: Optional[list[str]] = None
    group: Optional[str] = "universal"
    seed: int = 0
    sample_size: int = 100
    port: int = 8000
    workers: int = 0  # 0 = one worker per processor
    cascade: Optional[list[str]] = None

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f"k must be >= 1, got {self.k}")
        if self.min_total < 1:
            raise InputError(f"min_total must be >= 1, got {self.min_total}")
        if self.group is not None and self.group not in _GROUPS and self.group != "all":
            raise InputError(
                f"unknown group {self.group!r}; expected one of "
                f"{sorted(_GROUPS)} or 'all'"
            )

    @property
    def group_filter(self) -> Optional[LabelGroup]:
        if self.group is None or self.group == "all":
            return None
        return _GROUPS[self.group]

    @property
    def functional(self) -> FunctionalRelations:
        if self.functional_relations is None:
            return DEFAULT_FUNCTIONAL
        return FunctionalRelations(frozenset(self.functional_relations))

    @property
    def cascade_steps(self) -> tuple[str, ...]:
        return tuple(self.cascade) if self.cascade else DEFAULT_CASCADE

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def hashable_dict(self) -> dict:
        # where reports land does not affect what they contain, so the
        # output directory stays out of the config hash
        config = self.as_dict()
        config.pop("output_dir")
        return config

    def require(self, *names: str) -> None:
        missing = [n for n in names if getattr(self, n) is None]
        if missing:
            raise InputError(f"missing required configuration: {', '.join(missing)}")
        for name in names:
            path = getattr(self, name)
            if not Path(path).is_file():
                raise InputError(f"{name} file not found: {path}")


def load_config_file(path: str | Path) -> dict:
    try:
        with open(path, "rb") as handle:
            data = tomllib.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"bad TOML in {path}: {exc}") from exc
    flat: dict = {}
    for section in ("paths", "params"):
        flat.update(data.get(section, {}))
    for key in data:
        if key not in ("paths", "params"):
            flat[key] = data[key]
    return flat


def resolve_config(args: argparse.Namespace) -> RunConfig:
    values: dict = {}
    if getattr(args, "config", None):
        values.update(load_config_file(args.config))
    valid = {f.name for f in fields(RunConfig)}
    unknown = set(values) - valid
    if unknown:
        raise InputError(f"unknown config keys: {sorted(unknown)}")
    for name in valid:
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
    return RunConfig(**values)


def _load_pairs(config: RunConfig):
    config.require("manifest", "conllu")
    return load_corpus(config.manifest, config.conllu)


def _load_lexicon(config: RunConfig, pairs) -> SynonymLexicon:
    """Lexicon from whichever synonym resources are configured."""
    table = (
        load_embeddings(config.embeddings)
        if config.embeddings
        else EmbeddingTable([], np.empty((0, 0)))
    )
    wordnet = load_wordnet_pairs(config.wordnet) if config.wordnet else []
    vocabulary = {
        lemma
        for pair in pairs
        for segment in (pair.side1, pair.side2)
        for lemma in (t.lemma.replace("#", "") for t in segment.content_tokens())
    }
    return build_lexicon(table, wordnet, k=config.k, vocabulary=vocabulary)


def _resource_paths(config: RunConfig) -> dict:
    return {
        "manifest": config.manifest,
        "conllu": config.conllu,
        "embeddings": config.embeddings,
        "wordnet": config.wordnet,
        "parallel_source": config.parallel_source,
        "parallel_target": config.parallel_target,
        "source_text": config.source_text,
    }


def _prepare_output(config: RunConfig) -> Path:
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_json(out / "run_meta.json", build_meta(config.hashable_dict(), _resource_paths(config)))
    return out


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_classify(config: RunConfig) -> int:
    pairs = _load_pairs(config)
    lexicon = _load_lexicon(config, pairs)
    out = _prepare_output(config)

    report = classify_corpus(
        pairs,
        lexicon,
        funcs=config.functional,
        group_filter=config.group_filter,
        steps=config.cascade_steps,
        workers=config.workers,
    )
    rows = [
        (cls.value, report.counts[cls], format_ratio(report.ratio(cls)))
        for cls in CLASS_ORDER
    ]
    write_csv(out / "classification.csv", ("class", "count", "ratio"), rows)
    write_json(
        out / "classification.json",
        {
            "meta": build_meta(config.hashable_dict(), _resource_paths(config)),
            "group": config.group or "all",
            "total": report.total,
            "synonym_accountable": report.synonym_accountable,
            "classes": [
                {"class": cls.value, "count": report.counts[cls], "ratio": report.ratio(cls)}
                for cls in CLASS_ORDER
            ],
        },
    )
    print(f"classified {report.total} pairs -> {out / 'classification.csv'}")
    return EXIT_OK


def cmd_stats(config: RunConfig) -> int:
    pairs = _load_pairs(config)
    lexicon = _load_lexicon(config, pairs)
    out = _prepare_output(config)
    group = config.group_filter

    histogram = indel_histogram(pairs, group)
    write_csv(
        out / "indel_histogram.csv",
        ("indel_count", "frequency"),
        sorted(histogram.items()),
    )
    write_histogram_svg(out / "indel_histogram.svg", histogram)

    ranking = overrepresentation(
        pairs, min_total=config.min_total, top_n=config.top_n, group_filter=group
    )
    write_csv(
        out / "overrepresentation.csv",
        ("lemma", "indel_occurrences", "total_occurrences", "ratio"),
        [
            (r.lemma, r.indel_occurrences, r.total_occurrences, format_ratio(r.ratio))
            for r in ranking
        ],
    )

    full, partial, none = accounting_rates(pairs, lexicon, group)
    selected = [p for p in pairs if group is None or group == _group_of(p)]
    segments = [s for p in selected for s in (p.side1, p.side2)]
    distribution = label_distribution(pairs)

    proportion = None
    if config.source_text:
        config.require("source_text")
        source = Path(config.source_text).read_text(encoding="utf-8")
        proportion = nonelementary_proportion([s.text for s in segments], [source])

    write_json(
        out / "stats.json",
        {
            "meta": build_meta(config.hashable_dict(), _resource_paths(config)),
            "group": config.group or "all",
            "pairs_in_group": len(selected),
            "label_groups": {
                g.value: n for g, n in distribution.group_counts.items()
            },
            "label_counts": distribution.label_counts,
            "accounting": {
                "full": full,
                "partial": partial,
                "none": none,
                "nonzero_indel_pairs": full + partial + none,
            },
            "mean_token_length": mean_token_length(segments),
            "nonelementary_proportion": proportion,
        },
    )
    print(f"stats over {len(selected)} pairs -> {out / 'stats.json'}")
    return EXIT_OK


def _group_of(pair):
    return group_label(pair.label)


def cmd_pivot(config: RunConfig) -> int:
    pairs = _load_pairs(config)
    config.require("parallel_source", "parallel_target")
    out = _prepare_output(config)

    index = build_index_from_files(config.parallel_source, config.parallel_target)
    result = match_pairs(pairs, index)
    (out / "pivot_matched_ids.txt").write_text(
        "".join(pid + "\n" for pid in result.matched_ids), encoding="utf-8"
    )
    write_json(
        out / "pivot.json",
        {
            "meta": build_meta(config.hashable_dict(), _resource_paths(config)),
            "matched": len(result.matched_ids),
            "total": result.total,
            "match_rate": result.match_rate,
            "mean_length_matched": result.mean_length_matched,
            "mean_length_all": result.mean_length_all,
            "indexed_lines": index.aligned_lines,
        },
    )
    print(
        f"matched {len(result.matched_ids)}/{result.total} pairs "
        f"({result.match_rate:.1%}) -> {out / 'pivot.json'}"
    )
    return EXIT_OK


def cmd_sample(config: RunConfig) -> int:
    pairs = _load_pairs(config)
    lexicon = _load_lexicon(config, pairs)
    group = config.group_filter
    if group is not None:
        pairs = [p for p in pairs if _group_of(p) == group]
    sample = sample_unexplained(
        pairs,
        lexicon,
        funcs=config.functional,
        n=config.sample_size,
        seed=config.seed,
        steps=config.cascade_steps,
    )
    payload = {
        "seed": config.seed,
        "n": config.sample_size,
        "pair_ids": [p.id for p in sample],
    }
    path = Path(config.sample_file)
    path.parent.mkdir(parents=True, exist_ok=True)
    write_json(path, payload)
    print(f"sampled {len(sample)} unexplained pairs -> {path}")
    return EXIT_OK


def load_sample_file(path: str | Path) -> list[str]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        ids = data["pair_ids"]
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        raise InputError(f"cannot read sample file {path}: {exc}") from exc
    if not isinstance(ids, list):
        raise InputError(f"sample file {path} has no pair_ids list")
    return ids


def cmd_serve(config: RunConfig) -> int:
    import uvicorn

    from .server import AnnotationService, create_app

    pairs = _load_pairs(config)
    lexicon = _load_lexicon(config, pairs)
    sample_ids = load_sample_file(config.sample_file)
    store = AnnotationStore(config.annotations, sample_ids)
    service = AnnotationService(pairs, store, lexicon, config.functional)

    static_dir = config.frontend
    if static_dir is None:
        default = Path("frontend") / "dist"
        static_dir = str(default) if default.is_dir() else None
    app = create_app(service, static_dir=static_dir)

    print(f"serving annotation API on port {config.port}")
    try:
        uvicorn.run(app, host="127.0.0.1", port=config.port, log_level="warning")
    except SystemExit as exc:
        # uvicorn signals startup failures (e.g. port in use) this way
        raise InputError(f"server failed to start on port {config.port}") from exc
    return EXIT_OK


def cmd_report(config: RunConfig) -> int:
    code = cmd_classify(config)
    if code == EXIT_OK:
        code = cmd_stats(config)
    if code == EXIT_OK and config.parallel_source and config.parallel_target:
        code = cmd_pivot(config)
    return code


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paravar",
        description="Quantify variation between alternative translations in a paraphrase corpus",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser):
        p.add_argument("--config", help="TOML config file; flags override it")
        p.add_argument("--manifest", help="pair manifest TSV")
        p.add_argument("--conllu", help="parsed sentences, CoNLL-U")
        p.add_argument("--embeddings", help="lemma embedding file (text or binary)")
        p.add_argument("--wordnet", help="wordnet synonym pairs TSV")
        p.add_argument("--group", help="label group: universal, context_dependent, related_not_paraphrase, all")
        p.add_argument("--k", type=int, help="embedding neighbors per lemma (default 15)")
        p.add_argument("--output-dir", dest="output_dir", help="report output directory")
        p.add_argument("--workers", type=int, help="worker processes (default: one per processor)")
        p.add_argument("--seed", type=int, help="random seed")

    p_classify = sub.add_parser("classify", help="run the automatic variation cascade")
    common(p_classify)

    p_stats = sub.add_parser("stats", help="histogram, overrepresentation, accounting rates")
    common(p_stats)
    p_stats.add_argument("--min-total", dest="min_total", type=int,
                         help="minimum corpus occurrences for the ranking (default 50)")
    p_stats.add_argument("--top-n", dest="top_n", type=int, help="limit ranking length")
    p_stats.add_argument("--source-text", dest="source_text",
                         help="source material text file for the variation proportion")

    p_pivot = sub.add_parser("pivot", help="match pairs through a bilingual corpus")
    common(p_pivot)
    p_pivot.add_argument("--parallel-source", dest="parallel_source",
                         help="source-language side, one segment per line")
    p_pivot.add_argument("--parallel-target", dest="parallel_target",
                         help="target-language side, line-aligned with the source")

    p_sample = sub.add_parser("sample", help="draw pairs the cascade cannot explain")
    common(p_sample)
    p_sample.add_argument("--n", dest="sample_size", type=int, help="sample size (default 100)")
    p_sample.add_argument("--sample-file", dest="sample_file", help="where to write the sample")

    p_serve = sub.add_parser("serve", help="run the annotation API and UI")
    common(p_serve)
    p_serve.add_argument("--port", type=int, help="HTTP port (default 8000)")
    p_serve.add_argument("--sample-file", dest="sample_file", help="sample drawn by 'sample'")
    p_serve.add_argument("--annotations", help="JSON-lines annotation journal")
    p_serve.add_argument("--frontend", help="static UI asset directory")

    p_report = sub.add_parser("report", help="classify + stats (+ pivot when configured)")
    common(p_report)
    p_report.add_argument("--min-total", dest="min_total", type=int)
    p_report.add_argument("--top-n", dest="top_n", type=int)
    p_report.add_argument("--source-text", dest="source_text")
    p_report.add_argument("--parallel-source", dest="parallel_source")
    p_report.add_argument("--parallel-target", dest="parallel_target")

    return parser


_COMMANDS = {
    "classify": cmd_classify,
    "stats": cmd_stats,
    "pivot": cmd_pivot,
    "sample": cmd_sample,
    "serve": cmd_serve,
    "report": cmd_report,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = resolve_config(args)
        if config.workers < 1:
            config.workers = os.cpu_count() or 1
        return _COMMANDS[args.command](config)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - boundary of the process
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
