"""Corpus-level scoring, report construction and fixed-precision JSON output.

Segment scoring can fan out over worker processes; results are reduced in
segment-id order, so a report is byte-identical for any worker count. All
numbers in report files are serialized with exactly six decimal places,
which plain json.dumps cannot do, hence the small emitter here.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import InputError
from .metrics import METRICS, MetricConfig, MetricScore, score_segment
from .resources import StemTable, SynonymLexicon
from .text import CorpusSide, tokenize


@dataclass(slots=True)
class SegmentResult:
    id: int
    scores: dict[str, MetricScore]


@dataclass(slots=True)
class MetricReport:
    config: dict
    segments: list[SegmentResult]
    documents: list[dict]
    corpus: dict

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "segments": [
                {"id": seg.id, "scores": _scores_dict(seg.scores)}
                for seg in self.segments
            ],
            "documents": self.documents,
            "corpus": self.corpus,
        }


def _scores_dict(scores: dict[str, MetricScore]) -> dict:
    out = {}
    for metric, score in scores.items():
        entry: dict = {"value": score.value, "components": score.components}
        if score.flags:
            entry["flags"] = list(score.flags)
        if score.alignment is not None:
            entry["alignment"] = [list(pair) for pair in score.alignment]
        out[metric] = entry
    return out


# Worker-process state, set once per worker by the pool initializer so the
# resource tables are not re-pickled for every chunk.
_worker_state: dict = {}


def _init_worker(cfg: MetricConfig, stems: StemTable, synonyms: SynonymLexicon,
                 metrics: tuple[str, ...]) -> None:
    _worker_state["args"] = (cfg, stems, synonyms, metrics)


def _score_chunk_in_worker(chunk: list[tuple[int, str, str]]) -> list[tuple[int, dict]]:
    cfg, stems, synonyms, metrics = _worker_state["args"]
    return [
        (sid, score_segment(tokenize(hyp), tokenize(ref), cfg, stems, synonyms, metrics))
        for sid, hyp, ref in chunk
    ]


def score_corpus(
    hyps: CorpusSide,
    refs: CorpusSide,
    cfg: MetricConfig,
    stems: StemTable | None = None,
    synonyms: SynonymLexicon | None = None,
    metrics: tuple[str, ...] = METRICS,
    workers: int = 1,
    config_extras: dict | None = None,
) -> MetricReport:
    """Score every hypothesis/reference pair and aggregate per document.

    Aggregates are arithmetic means of segment values. Document ranges come
    from the reference side.
    """
    if len(hyps) != len(refs):
        raise InputError(
            f"segment count mismatch: {len(hyps)} hypothesis vs {len(refs)} reference"
        )
    if len(refs) == 0:
        raise InputError("empty corpus: nothing to score")
    for metric in metrics:
        if metric not in METRICS:
            raise InputError(f"unknown metric {metric!r}")
    stems = stems or StemTable()
    synonyms = synonyms or SynonymLexicon()

    triples = [
        (h.id, h.text, r.text) for h, r in zip(hyps.segments, refs.segments)
    ]
    if workers <= 1:
        _init_worker(cfg, stems, synonyms, metrics)
        scored = _score_chunk_in_worker(triples)
    else:
        chunk_size = max(1, math.ceil(len(triples) / (workers * 4)))
        chunks = [
            triples[i : i + chunk_size] for i in range(0, len(triples), chunk_size)
        ]
        with ProcessPoolExecutor(
            max_workers=workers,
            initializer=_init_worker,
            initargs=(cfg, stems, synonyms, metrics),
        ) as pool:
            scored = [item for part in pool.map(_score_chunk_in_worker, chunks)
                      for item in part]
    scored.sort(key=lambda item: item[0])
    segments = [SegmentResult(sid, scores) for sid, scores in scored]

    by_id = {seg.id: seg.scores for seg in segments}
    documents = []
    for doc in refs.documents:
        ids = [sid for sid in by_id if doc.contains(sid)]
        documents.append(
            {
                "name": doc.name,
                "start_id": doc.start_id,
                "end_id": doc.end_id,
                "means": _mean_values(by_id, ids, metrics),
            }
        )
    corpus = {
        "segments": len(segments),
        "means": _mean_values(by_id, list(by_id), metrics),
    }

    config = {
        "metrics": list(metrics),
        "max_n": cfg.max_n,
        "meteor_penalty_mode": cfg.meteor_penalty_mode,
        "atec_coefficient": cfg.atec_coefficient,
        "strip_punctuation": cfg.strip_punctuation,
        "smooth_epsilon": cfg.smooth_epsilon,
    }
    config.update(config_extras or {})
    return MetricReport(config, segments, documents, corpus)


def _mean_values(
    by_id: dict[int, dict[str, MetricScore]],
    ids: list[int],
    metrics: tuple[str, ...],
) -> dict[str, float]:
    if not ids:
        return {metric: 0.0 for metric in metrics}
    ordered = sorted(ids)
    return {
        metric: math.fsum(by_id[sid][metric].value for sid in ordered) / len(ordered)
        for metric in metrics
    }


def dumps_fixed(obj, indent: int = 2) -> str:
    """JSON text with every float printed as a fixed 6-decimal literal."""
    pieces: list[str] = []
    _emit(obj, pieces, indent, 0)
    pieces.append("\n")
    return "".join(pieces)


def _emit(obj, out: list[str], indent: int, depth: int) -> None:
    pad = " " * (indent * (depth + 1))
    end_pad = " " * (indent * depth)
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format(obj, ".6f"))
    elif isinstance(obj, str):
        out.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, value) in enumerate(obj.items()):
            out.append(f"{pad}{json.dumps(str(key), ensure_ascii=False)}: ")
            _emit(value, out, indent, depth + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(end_pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for i, value in enumerate(obj):
            out.append(pad)
            _emit(value, out, indent, depth + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(end_pad + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__} in a report")


def write_report(report: MetricReport, path: str) -> None:
    """Serialize atomically: a failed run never leaves a partial report."""
    write_json(report.to_dict(), path)


def write_json(payload: dict, path: str) -> None:
    text = dumps_fixed(payload)
    tmp_path = f"{path}.tmp"
    with open(tmp_path, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp_path, path)


def load_report(path: str) -> dict:
    """Parse a report file back into the to_dict() shape."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read report {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON: {exc}") from exc
    for key in ("config", "segments", "documents", "corpus"):
        if key not in data:
            raise InputError(f"{path}: missing report key {key!r}")
    return data
