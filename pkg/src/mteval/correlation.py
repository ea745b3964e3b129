"""Pearson correlation between metric scores and human judgments.

Sentence level pairs per-segment values; corpus level pairs per-document
means. A constant series has no defined correlation: pearson returns None
(an explicit undefined marker) rather than propagating NaN.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InsufficientDataError
from .judgments import JudgmentStore, mean_normalized_by_segment

SENTENCE = "sentence"
CORPUS = "corpus"


@dataclass(slots=True)
class PairedSeries:
    x: list[float]
    y: list[float]
    labels: list


@dataclass(slots=True)
class CorrelationResult:
    system: str
    metric: str
    level: str
    r: float | None
    n: int

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "metric": self.metric,
            "level": self.level,
            "r": self.r,
            "n": self.n,
        }


def pearson(series: PairedSeries) -> float | None:
    """Corrected-sums Pearson r; None when either series is constant.

    The deviation sums are accumulated on mean-centered values: algebraically
    identical to the sum-of-squares-minus-square-of-sums form, but immune to
    the cancellation that form suffers on nearly-constant series.
    """
    x, y = series.x, series.y
    n = len(x)
    if n != len(y):
        raise InsufficientDataError(
            f"paired series length mismatch: {n} vs {len(y)}"
        )
    if n < 2:
        raise InsufficientDataError(
            f"need at least 2 paired points, got {n}"
        )
    if min(x) == max(x) or min(y) == max(y):
        return None
    mean_x = math.fsum(x) / n
    mean_y = math.fsum(y) / n
    dx2 = math.fsum((v - mean_x) ** 2 for v in x)
    dy2 = math.fsum((v - mean_y) ** 2 for v in y)
    dxy = math.fsum((a - mean_x) * (b - mean_y) for a, b in zip(x, y))
    denom = math.sqrt(dx2 * dy2)
    if denom == 0.0:
        return None
    return max(-1.0, min(1.0, dxy / denom))


def sentence_level(
    report: dict, store: JudgmentStore, system: str, metric: str
) -> CorrelationResult:
    """Pearson r over per-segment (metric value, mean human score) pairs."""
    metric_by_id = _segment_values(report, metric)
    human_by_id = mean_normalized_by_segment(store.for_system(system))
    shared = sorted(set(metric_by_id) & set(human_by_id))
    if len(shared) < 2:
        missing = sorted(set(metric_by_id) ^ set(human_by_id))
        shown = ", ".join(str(i) for i in missing[:20])
        if len(missing) > 20:
            shown += f", ... ({len(missing) - 20} more)"
        raise InsufficientDataError(
            f"only {len(shared)} segment(s) have both a {metric} score and a "
            f"human score for system {system!r}; unpaired ids: [{shown}]",
            missing_ids=missing,
        )
    series = PairedSeries(
        x=[metric_by_id[sid] for sid in shared],
        y=[human_by_id[sid] for sid in shared],
        labels=shared,
    )
    return CorrelationResult(system, metric, SENTENCE, pearson(series), len(shared))


def corpus_level(
    report: dict, store: JudgmentStore, system: str, metric: str
) -> CorrelationResult:
    """Pearson r over per-document (mean metric, mean human) pairs.

    The metric side uses the report's document aggregates; the human side
    averages normalized scores over the judged segments of each document.
    Documents with no judgments for the system are dropped.
    """
    documents = report["documents"]
    if len(documents) < 2:
        raise InsufficientDataError(
            f"corpus-level correlation needs at least 2 documents, "
            f"got {len(documents)}"
        )
    human_by_id = mean_normalized_by_segment(store.for_system(system))
    xs: list[float] = []
    ys: list[float] = []
    labels: list[str] = []
    for doc in documents:
        judged = [
            value
            for sid, value in human_by_id.items()
            if doc["start_id"] <= sid <= doc["end_id"]
        ]
        if not judged:
            continue
        if metric not in doc["means"]:
            raise InsufficientDataError(
                f"report has no {metric!r} aggregate for document {doc['name']!r}"
            )
        xs.append(doc["means"][metric])
        ys.append(math.fsum(judged) / len(judged))
        labels.append(doc["name"])
    if len(xs) < 2:
        skipped = [d["name"] for d in documents if d["name"] not in labels]
        raise InsufficientDataError(
            f"only {len(xs)} document(s) have human judgments for system "
            f"{system!r}; documents without judgments: {skipped}"
        )
    series = PairedSeries(xs, ys, labels)
    return CorrelationResult(system, metric, CORPUS, pearson(series), len(xs))


def _segment_values(report: dict, metric: str) -> dict[int, float]:
    values: dict[int, float] = {}
    for seg in report["segments"]:
        if metric in seg["scores"]:
            values[seg["id"]] = seg["scores"][metric]["value"]
    if not values:
        raise InsufficientDataError(f"report contains no {metric!r} scores")
    return values
