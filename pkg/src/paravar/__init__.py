"""paravar: quantify and categorize variation between alternative
translations in a paraphrase corpus."""

from .corpus import (
    LabelDistribution,
    LabelGroup,
    PairLabel,
    ParaphrasePair,
    ParsedSegment,
    Sentence,
    Token,
    group_label,
    label_distribution,
    load_corpus,
    save_corpus,
)
from .indels import (
    CLAS_FUNCTIONAL_RELATIONS,
    DEFAULT_FUNCTIONAL,
    FunctionalRelations,
    LemmaIndel,
    ZeroIndelKind,
    indel_count,
    lemma_indel,
    zero_indel_subtype,
)
from .synonymy import (
    AccountingResult,
    EmbeddingTable,
    SynonymLexicon,
    account_indels,
    build_lexicon,
    knn_synonyms,
    load_embeddings,
    load_wordnet_pairs,
)
from .classify import (
    ClassificationReport,
    VariationClass,
    classify,
    classify_corpus,
)
from .stats import (
    OverrepresentationRecord,
    accounting_rates,
    indel_histogram,
    mean_token_length,
    nonelementary_proportion,
    overrepresentation,
    rank_overrepresentation,
)
from .pivot import (
    PivotIndex,
    PivotMatchResult,
    build_index,
    build_index_from_files,
    match_pairs,
    normalize,
)
from .annotation import (
    AnnotationRecord,
    AnnotationStore,
    CategoryFrequency,
    ManualCategory,
    category_frequencies,
    sample_unexplained,
    sole_category_rate,
)

__version__ = "0.1.0"

__all__ = [
    "AccountingResult",
    "AnnotationRecord",
    "AnnotationStore",
    "CategoryFrequency",
    "CLAS_FUNCTIONAL_RELATIONS",
    "ClassificationReport",
    "DEFAULT_FUNCTIONAL",
    "EmbeddingTable",
    "FunctionalRelations",
    "LabelDistribution",
    "LabelGroup",
    "LemmaIndel",
    "ManualCategory",
    "OverrepresentationRecord",
    "PairLabel",
    "ParaphrasePair",
    "ParsedSegment",
    "PivotIndex",
    "PivotMatchResult",
    "Sentence",
    "SynonymLexicon",
    "Token",
    "VariationClass",
    "ZeroIndelKind",
    "account_indels",
    "accounting_rates",
    "build_index",
    "build_index_from_files",
    "build_lexicon",
    "category_frequencies",
    "classify",
    "classify_corpus",
    "group_label",
    "indel_count",
    "indel_histogram",
    "knn_synonyms",
    "label_distribution",
    "lemma_indel",
    "load_corpus",
    "load_embeddings",
    "load_wordnet_pairs",
    "match_pairs",
    "mean_token_length",
    "nonelementary_proportion",
    "normalize",
    "overrepresentation",
    "rank_overrepresentation",
    "sample_unexplained",
    "save_corpus",
    "sole_category_rate",
    "zero_indel_subtype",
]
