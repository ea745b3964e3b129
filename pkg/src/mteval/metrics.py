"""Segment-level metric scorers: BLEU, GTM, METEOR and ATEC.

All four share the same preprocessing (optional punctuation stripping) and
return a MetricScore whose value is always in [0, 1]. BLEU here uses the
linear length penalty min(1, |hyp|/|ref|), not the exponential one found in
other toolkits; see README for the compatibility note.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .align import align_unigrams, position_difference
from .errors import InputError
from .resources import StemTable, SynonymLexicon
from .text import TokenizedSegment

METRICS = ("bleu", "gtm", "meteor", "atec")

PENALTY_PAPER = "paper"
PENALTY_CLASSIC = "classic"


@dataclass(slots=True)
class MetricConfig:
    """Scoring knobs shared by all metrics.

    meteor_penalty_mode "paper" uses chunks/m directly; "classic" uses
    0.5*(chunks/m)^3, which unlike the paper mode does not penalize a
    perfect translation. include_alignment embeds each alignment's pair
    list in the report (verbose; off by default).
    """

    max_n: int = 4
    meteor_penalty_mode: str = PENALTY_PAPER
    atec_coefficient: float = 4.0
    strip_punctuation: bool = True
    smooth_epsilon: float | None = None
    include_alignment: bool = False

    def __post_init__(self) -> None:
        if self.max_n < 1:
            raise InputError(f"max_n must be >= 1, got {self.max_n}")
        if self.atec_coefficient <= 0:
            raise InputError(
                f"atec_coefficient must be > 0, got {self.atec_coefficient}"
            )
        if self.meteor_penalty_mode not in (PENALTY_PAPER, PENALTY_CLASSIC):
            raise InputError(
                f"unknown meteor penalty mode {self.meteor_penalty_mode!r}"
            )
        if self.smooth_epsilon is not None and self.smooth_epsilon <= 0:
            raise InputError("smoothing epsilon must be positive")


@dataclass(slots=True)
class MetricScore:
    """One metric's value for one segment plus its formula inputs.

    `alignment` carries the matched (hyp_index, ref_index, stage) triples
    when the config asks for verbose reports; None otherwise.
    """

    metric: str
    value: float
    components: dict[str, float | int] = field(default_factory=dict)
    flags: tuple[str, ...] = ()
    alignment: list[tuple[int, int, str]] | None = None


def _prepare(
    hyp: TokenizedSegment, ref: TokenizedSegment, cfg: MetricConfig
) -> tuple[TokenizedSegment, TokenizedSegment]:
    if cfg.strip_punctuation:
        return hyp.without_punctuation(), ref.without_punctuation()
    return hyp, ref


def _ngram_list(tokens: tuple[str, ...], n: int) -> list[tuple[str, ...]]:
    return [tokens[i : i + n] for i in range(len(tokens) - n + 1)]


def ngram_precision(
    hyp: TokenizedSegment, ref: TokenizedSegment, n: int
) -> float | None:
    """Clipped n-gram precision; None when the hypothesis has no n-grams.

    Each reference n-gram can back at most as many hypothesis n-grams as its
    own multiplicity.
    """
    if n < 1:
        raise InputError(f"n-gram order must be >= 1, got {n}")
    hyp_ngrams = _ngram_list(hyp.tokens, n)
    if not hyp_ngrams:
        return None
    ref_counts = Counter(_ngram_list(ref.tokens, n))
    clipped = 0
    for gram, count in Counter(hyp_ngrams).items():
        avail = ref_counts.get(gram)
        if avail:
            clipped += count if count < avail else avail
    return clipped / len(hyp_ngrams)


def brevity_penalty(hyp_len: int, ref_len: int) -> float:
    """Linear length penalty min(1, hyp_len/ref_len)."""
    if ref_len == 0:
        raise InputError("invalid reference: zero length")
    return min(1.0, hyp_len / ref_len)


def _fmeasure(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def bleu_score(
    hyp: TokenizedSegment, ref: TokenizedSegment, cfg: MetricConfig
) -> MetricScore:
    """Geometric mean of clipped n-gram precisions times the length penalty.

    Orders beyond the hypothesis length have no n-grams and are excluded
    from both the product and the exponent, so a perfect one-word
    translation still scores 1. Any zero precision zeroes the score unless
    smoothing is enabled.
    """
    hyp, ref = _prepare(hyp, ref, cfg)
    if hyp.length == 0:
        return MetricScore("bleu", 0.0, {"bp": 0.0}, flags=("zero-length",))
    orders = min(cfg.max_n, hyp.length)
    precisions = [ngram_precision(hyp, ref, n) for n in range(1, orders + 1)]
    components: dict[str, float | int] = {
        f"precision_{n}": p for n, p in enumerate(precisions, start=1)
    }
    components["ngram_orders"] = orders
    if ref.length == 0:
        components["bp"] = 0.0
        return MetricScore("bleu", 0.0, components, flags=("empty-reference",))
    bp = brevity_penalty(hyp.length, ref.length)
    components["bp"] = bp
    if cfg.smooth_epsilon is not None:
        precisions = [p if p > 0 else cfg.smooth_epsilon for p in precisions]
    if any(p == 0.0 for p in precisions):
        return MetricScore("bleu", 0.0, components)
    product = 1.0
    for p in precisions:
        product *= p
    return MetricScore("bleu", bp * product ** (1.0 / orders), components)


def _degenerate(metric: str, hyp_len: int, ref_len: int) -> MetricScore | None:
    if hyp_len == 0 and ref_len == 0:
        return MetricScore(metric, 1.0, {"m": 0}, flags=("degenerate",))
    if hyp_len == 0 or ref_len == 0:
        return MetricScore(metric, 0.0, {"m": 0})
    return None


def gtm_score(
    hyp: TokenizedSegment, ref: TokenizedSegment, cfg: MetricConfig
) -> MetricScore:
    """Unigram F-measure over exact matches only (no stem/synonym backoff)."""
    hyp, ref = _prepare(hyp, ref, cfg)
    degenerate = _degenerate("gtm", hyp.length, ref.length)
    if degenerate is not None:
        return degenerate
    alignment = align_unigrams(hyp, ref)
    precision = alignment.m / hyp.length
    recall = alignment.m / ref.length
    components = {"m": alignment.m, "precision": precision, "recall": recall}
    return MetricScore("gtm", _fmeasure(precision, recall), components,
                       alignment=list(alignment.pairs) if cfg.include_alignment else None)


def meteor_score(
    hyp: TokenizedSegment,
    ref: TokenizedSegment,
    stems: StemTable | None,
    synonyms: SynonymLexicon | None,
    cfg: MetricConfig,
) -> MetricScore:
    """(1 - penalty) * unigram F-mean over the exact/stem/synonym alignment.

    In "paper" penalty mode even an identical pair scores 1 - 1/length,
    because one chunk over m matches always leaves a nonzero penalty.
    """
    hyp, ref = _prepare(hyp, ref, cfg)
    degenerate = _degenerate("meteor", hyp.length, ref.length)
    if degenerate is not None:
        return degenerate
    alignment = align_unigrams(hyp, ref, stems, synonyms)
    dump = list(alignment.pairs) if cfg.include_alignment else None
    m, ch = alignment.m, alignment.chunks
    if m == 0:
        return MetricScore("meteor", 0.0, {"m": 0, "ch": 0}, alignment=dump)
    precision = m / hyp.length
    recall = m / ref.length
    f_mean = _fmeasure(precision, recall)
    if cfg.meteor_penalty_mode == PENALTY_PAPER:
        penalty = ch / m
    else:
        penalty = 0.5 * (ch / m) ** 3
    components = {
        "m": m,
        "ch": ch,
        "precision": precision,
        "recall": recall,
        "f_mean": f_mean,
        "penalty": penalty,
    }
    return MetricScore("meteor", (1.0 - penalty) * f_mean, components, alignment=dump)


def atec_score(
    hyp: TokenizedSegment,
    ref: TokenizedSegment,
    stems: StemTable | None,
    synonyms: SynonymLexicon | None,
    cfg: MetricConfig,
) -> MetricScore:
    """Unigram F-measure damped by the word-position-difference penalty.

    The penalty 1 - coefficient * posdiff is clamped at 0, so a position
    difference above 1/coefficient (0.25 by default) zeroes the score.
    """
    hyp, ref = _prepare(hyp, ref, cfg)
    degenerate = _degenerate("atec", hyp.length, ref.length)
    if degenerate is not None:
        return degenerate
    alignment = align_unigrams(hyp, ref, stems, synonyms)
    dump = list(alignment.pairs) if cfg.include_alignment else None
    m = alignment.m
    precision = m / hyp.length
    recall = m / ref.length
    f = _fmeasure(precision, recall)
    posdiff = position_difference(alignment, hyp, ref)
    penalty = max(0.0, 1.0 - cfg.atec_coefficient * posdiff)
    components = {
        "m": m,
        "precision": precision,
        "recall": recall,
        "f": f,
        "posdiff": posdiff,
        "penalty": penalty,
    }
    return MetricScore("atec", f * penalty, components, alignment=dump)


def score_segment(
    hyp: TokenizedSegment,
    ref: TokenizedSegment,
    cfg: MetricConfig,
    stems: StemTable | None = None,
    synonyms: SynonymLexicon | None = None,
    metrics: tuple[str, ...] = METRICS,
) -> dict[str, MetricScore]:
    """Score one tokenized pair with every requested metric."""
    scores: dict[str, MetricScore] = {}
    for metric in metrics:
        if metric == "bleu":
            scores[metric] = bleu_score(hyp, ref, cfg)
        elif metric == "gtm":
            scores[metric] = gtm_score(hyp, ref, cfg)
        elif metric == "meteor":
            scores[metric] = meteor_score(hyp, ref, stems, synonyms, cfg)
        elif metric == "atec":
            scores[metric] = atec_score(hyp, ref, stems, synonyms, cfg)
        else:
            raise InputError(f"unknown metric {metric!r}")
    return scores
