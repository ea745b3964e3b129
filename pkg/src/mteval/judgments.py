"""Human adequacy judgments: the 0-4 scale, ten parameters, JSONL storage.

A judgment is one annotator's ten parameter scores for one system's output
of one segment. Scores average uniformly; the average converts to a
percentage (avg/4*100) or to [0,1] (avg/4) for correlation against metric
scores.
"""

from __future__ import annotations

import json
import math
import os
import threading
from dataclasses import dataclass
from datetime import datetime

from .errors import DuplicateJudgmentError, InputError, JudgmentValidationError

SCALE_LABELS = (
    "Not Acceptable (0)",
    "Partially Acceptable (1)",
    "Acceptable (2)",
    "Perfect (3)",
    "Ideal (4)",
)

PARAMETER_LABELS = (
    "Translation of gender and number of the nouns",
    "Translation of tense in the source sentence",
    "Translation of voice in the source sentence",
    "Identification of the proper nouns",
    "Use of adjectives and adverbs corresponding to the nouns and verbs in the source sentence",
    "Selection of proper words/synonyms",
    "The sequence of noun, helping verb and verb in the translation",
    "Use of punctuation signs in the translation",
    "Maintaining the stress on the significant part of the source sentence in the translation",
    "Maintaining the semantics of the source sentence in the translation",
)

N_PARAMETERS = len(PARAMETER_LABELS)
MAX_SCORE = 4

# Serialized key order is part of the JSONL schema.
_FIELD_ORDER = ("segment_id", "system", "annotator", "scores", "timestamp")


@dataclass(slots=True)
class HumanJudgment:
    segment_id: int
    system: str
    annotator: str
    scores: tuple[int, ...]
    timestamp: str

    def __post_init__(self) -> None:
        self.scores = tuple(self.scores)
        _validate(self)

    @property
    def key(self) -> tuple[int, str, str]:
        return (self.segment_id, self.system, self.annotator)

    def to_json_line(self) -> str:
        payload = {
            "segment_id": self.segment_id,
            "system": self.system,
            "annotator": self.annotator,
            "scores": list(self.scores),
            "timestamp": self.timestamp,
        }
        return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))

    @classmethod
    def from_dict(cls, payload: dict) -> "HumanJudgment":
        for field_name in _FIELD_ORDER:
            if field_name not in payload:
                raise JudgmentValidationError(field_name, "missing field")
        unknown = set(payload) - set(_FIELD_ORDER)
        if unknown:
            raise JudgmentValidationError(sorted(unknown)[0], "unknown field")
        scores = payload["scores"]
        if not isinstance(scores, (list, tuple)):
            raise JudgmentValidationError("scores", "must be an array")
        return cls(
            payload["segment_id"],
            payload["system"],
            payload["annotator"],
            tuple(scores),
            payload["timestamp"],
        )


def _validate(j: HumanJudgment) -> None:
    if not isinstance(j.segment_id, int) or isinstance(j.segment_id, bool):
        raise JudgmentValidationError("segment_id", "must be an integer")
    if j.segment_id < 0:
        raise JudgmentValidationError("segment_id", "must be non-negative")
    for field_name in ("system", "annotator"):
        value = getattr(j, field_name)
        if not isinstance(value, str) or not value:
            raise JudgmentValidationError(field_name, "must be a non-empty string")
    if len(j.scores) != N_PARAMETERS:
        raise JudgmentValidationError(
            "scores", f"expected {N_PARAMETERS} scores, got {len(j.scores)}"
        )
    for i, score in enumerate(j.scores):
        if not isinstance(score, int) or isinstance(score, bool):
            raise JudgmentValidationError("scores", f"scores[{i}] must be an integer")
        if not 0 <= score <= MAX_SCORE:
            raise JudgmentValidationError(
                "scores", f"scores[{i}] must be in 0..{MAX_SCORE}, got {score}"
            )
    if not isinstance(j.timestamp, str) or not j.timestamp:
        raise JudgmentValidationError("timestamp", "must be a non-empty string")
    try:
        datetime.fromisoformat(j.timestamp.replace("Z", "+00:00"))
    except ValueError:
        raise JudgmentValidationError("timestamp", "must be ISO-8601") from None


def average_score(judgment: HumanJudgment) -> float:
    """Arithmetic mean of the ten parameter scores, in [0, 4]."""
    return math.fsum(judgment.scores) / N_PARAMETERS


def to_percentage(avg: float) -> float:
    """Map a 0-4 average to 0-100 percent."""
    if not 0 <= avg <= MAX_SCORE:
        raise InputError(f"average {avg} outside the 0..{MAX_SCORE} scale")
    return avg / MAX_SCORE * 100


def normalized_human(avg: float) -> float:
    """Map a 0-4 average to [0, 1] for correlation with metric scores."""
    return avg / MAX_SCORE


class JudgmentStore:
    """Append-only judgment sequence, optionally backed by a JSONL file.

    Appends are serialized through one lock; a backed store flushes and
    fsyncs each full line before an append returns, so an acknowledged
    judgment survives a crash and lines are never torn.
    """

    def __init__(self, path: str | None = None):
        self._path = path
        self._fh = None
        self._lock = threading.Lock()
        self.judgments: list[HumanJudgment] = []
        self._keys: set[tuple[int, str, str]] = set()
        if path is not None and os.path.exists(path):
            for judgment in _read_jsonl(path):
                self._append_memory(judgment, source=path)

    @classmethod
    def load(cls, path: str) -> "JudgmentStore":
        """Read-only snapshot of an existing JSONL file."""
        store = cls()
        for judgment in _read_jsonl(path):
            store._append_memory(judgment, source=path)
        return store

    def _append_memory(self, judgment: HumanJudgment, source: str = "") -> None:
        if judgment.key in self._keys:
            where = f" in {source}" if source else ""
            raise DuplicateJudgmentError(
                f"duplicate judgment for segment {judgment.segment_id}, "
                f"system {judgment.system!r}, annotator {judgment.annotator!r}{where}"
            )
        self._keys.add(judgment.key)
        self.judgments.append(judgment)

    def append(self, judgment: HumanJudgment) -> None:
        with self._lock:
            if judgment.key in self._keys:
                raise DuplicateJudgmentError(
                    f"duplicate judgment for segment {judgment.segment_id}, "
                    f"system {judgment.system!r}, annotator {judgment.annotator!r}"
                )
            if self._path is not None:
                if self._fh is None:
                    self._fh = open(self._path, "a", encoding="utf-8")
                self._fh.write(judgment.to_json_line() + "\n")
                self._fh.flush()
                os.fsync(self._fh.fileno())
            self._keys.add(judgment.key)
            self.judgments.append(judgment)

    def close(self) -> None:
        with self._lock:
            if self._fh is not None:
                self._fh.close()
                self._fh = None

    def has(self, segment_id: int, system: str, annotator: str) -> bool:
        return (segment_id, system, annotator) in self._keys

    def for_system(self, system: str) -> list[HumanJudgment]:
        return [j for j in self.judgments if j.system == system]

    def systems(self) -> list[str]:
        return sorted({j.system for j in self.judgments})

    def __iter__(self):
        return iter(self.judgments)

    def __len__(self) -> int:
        return len(self.judgments)


def mean_normalized_by_segment(
    judgments: list[HumanJudgment],
) -> dict[int, float]:
    """Per-segment human score in [0,1], averaging over annotators."""
    by_segment: dict[int, list[float]] = {}
    for judgment in judgments:
        by_segment.setdefault(judgment.segment_id, []).append(
            normalized_human(average_score(judgment))
        )
    return {
        sid: math.fsum(values) / len(values)
        for sid, values in by_segment.items()
    }


def _read_jsonl(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise InputError(f"cannot read judgments file {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise InputError(
            f"{path}: invalid UTF-8 at byte offset {exc.start}: {exc.reason}"
        ) from exc
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            payload = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{lineno}: not valid JSON: {exc}") from exc
        try:
            yield HumanJudgment.from_dict(payload)
        except JudgmentValidationError as exc:
            raise InputError(f"{path}:{lineno}: {exc}") from exc
