"""Machine translation evaluation toolkit.

Four segment-level metrics (BLEU with a linear length penalty, GTM, METEOR
with stem/synonym backoff, ATEC with a word-position penalty), a human
adequacy judgment store, and Pearson correlation between the two, plus a
CLI and an annotation HTTP service.
"""

from .align import Alignment, align_unigrams, count_chunks, position_difference
from .correlation import (
    CorrelationResult,
    PairedSeries,
    corpus_level,
    pearson,
    sentence_level,
)
from .judgments import (
    PARAMETER_LABELS,
    SCALE_LABELS,
    HumanJudgment,
    JudgmentStore,
    average_score,
    normalized_human,
    to_percentage,
)
from .metrics import (
    METRICS,
    MetricConfig,
    MetricScore,
    atec_score,
    bleu_score,
    brevity_penalty,
    gtm_score,
    meteor_score,
    ngram_precision,
)
from .resources import (
    StemTable,
    SynonymLexicon,
    are_synonyms,
    load_stems,
    load_synonyms,
)
from .scoring import MetricReport, load_report, score_corpus, write_report
from .text import (
    CorpusSide,
    Document,
    Segment,
    TokenizedSegment,
    load_corpus,
    normalize,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "Alignment",
    "CorpusSide",
    "CorrelationResult",
    "Document",
    "HumanJudgment",
    "JudgmentStore",
    "METRICS",
    "MetricConfig",
    "MetricReport",
    "MetricScore",
    "PARAMETER_LABELS",
    "PairedSeries",
    "SCALE_LABELS",
    "Segment",
    "StemTable",
    "SynonymLexicon",
    "TokenizedSegment",
    "align_unigrams",
    "are_synonyms",
    "atec_score",
    "average_score",
    "bleu_score",
    "brevity_penalty",
    "corpus_level",
    "count_chunks",
    "gtm_score",
    "load_corpus",
    "load_report",
    "load_stems",
    "load_synonyms",
    "meteor_score",
    "ngram_precision",
    "normalize",
    "normalized_human",
    "pearson",
    "position_difference",
    "score_corpus",
    "sentence_level",
    "to_percentage",
    "tokenize",
    "write_report",
]
