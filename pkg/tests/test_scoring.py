import json
import math

import pytest

from mteval import MetricConfig, load_corpus, load_report, score_corpus, write_report
from mteval.errors import InputError
from mteval.scoring import dumps_fixed


def write_corpus(tmp_path, name, lines):
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


def test_single_segment_aggregate_equals_segment(tmp_path, cfg):
    hyp = load_corpus(write_corpus(tmp_path, "h.txt", ["the cat sat"]))
    ref = load_corpus(write_corpus(tmp_path, "r.txt", ["the cat sat down"]))
    report = score_corpus(hyp, ref, cfg)
    for metric in ("bleu", "gtm", "meteor", "atec"):
        assert report.corpus["means"][metric] == report.segments[0].scores[metric].value


def test_corpus_mean_is_arithmetic(tmp_path, cfg):
    hyp = load_corpus(write_corpus(tmp_path, "h.txt", ["a b c d", "x y"]))
    ref = load_corpus(write_corpus(tmp_path, "r.txt", ["a b c d", "x q"]))
    report = score_corpus(hyp, ref, cfg)
    values = [seg.scores["gtm"].value for seg in report.segments]
    assert report.corpus["means"]["gtm"] == pytest.approx(math.fsum(values) / 2)


def test_identity_corpus_aggregates(tmp_path, cfg):
    lines = [f"word{i} tail common" for i in range(5)]
    hyp = load_corpus(write_corpus(tmp_path, "h.txt", lines))
    ref = load_corpus(write_corpus(tmp_path, "r.txt", lines))
    report = score_corpus(hyp, ref, cfg)
    for metric in ("bleu", "gtm", "atec"):
        assert report.corpus["means"][metric] == 1.0
    assert report.corpus["means"]["meteor"] == pytest.approx(1 - 1 / 3)


def test_count_mismatch_names_both_counts(tmp_path, cfg):
    hyp = load_corpus(write_corpus(tmp_path, "h.txt", ["a", "b"]))
    ref = load_corpus(write_corpus(tmp_path, "r.txt", ["a"]))
    with pytest.raises(InputError, match="2 hypothesis vs 1 reference"):
        score_corpus(hyp, ref, cfg)


def test_empty_corpus_rejected(tmp_path, cfg):
    # an empty file has zero lines, hence zero segments
    (tmp_path / "h.txt").write_text("", encoding="utf-8")
    hyp = load_corpus(str(tmp_path / "h.txt"))
    with pytest.raises(InputError, match="empty corpus"):
        score_corpus(hyp, hyp, cfg)


def test_worker_fanout_is_bytewise_deterministic(tmp_path, cfg):
    lines_h = [f"tok{i} tok{i+1} shared word" for i in range(30)]
    lines_r = [f"tok{i} shared other word" for i in range(30)]
    hyp = load_corpus(write_corpus(tmp_path, "h.txt", lines_h))
    ref = load_corpus(write_corpus(tmp_path, "r.txt", lines_r))
    serialized = {
        workers: dumps_fixed(score_corpus(hyp, ref, cfg, workers=workers).to_dict())
        for workers in (1, 2)
    }
    assert serialized[1] == serialized[2]


def test_worker_fanout_with_resources_matches_sequential(tmp_path, cfg):
    from mteval import StemTable, SynonymLexicon

    stems = StemTable({"ran": "run", "running": "run"})
    synonyms = SynonymLexicon.from_synsets([frozenset({"big", "large"})])
    hyp = load_corpus(write_corpus(tmp_path, "h.txt", ["running big house", "a b"] * 10))
    ref = load_corpus(write_corpus(tmp_path, "r.txt", ["ran large house", "a c"] * 10))
    reports = [
        score_corpus(hyp, ref, cfg, stems=stems, synonyms=synonyms, workers=w).to_dict()
        for w in (1, 2)
    ]
    assert reports[0] == reports[1]
    first = reports[0]["segments"][0]["scores"]["meteor"]["components"]
    assert first["m"] == 3  # stem + synonym backoff both engaged


def test_document_means_follow_manifest(tmp_path, cfg):
    hyp = load_corpus(write_corpus(tmp_path, "h.txt", ["a b", "a b", "x y", "p q"]))
    manifest = tmp_path / "docs.tsv"
    manifest.write_text("first\t1\t2\nsecond\t3\t4\n", encoding="utf-8")
    ref = load_corpus(
        write_corpus(tmp_path, "r.txt", ["a b", "a b", "x y", "z w"]),
        manifest_path=str(manifest),
    )
    report = score_corpus(hyp, ref, cfg)
    assert [d["name"] for d in report.documents] == ["first", "second"]
    assert report.documents[0]["means"]["gtm"] == 1.0
    assert report.documents[1]["means"]["gtm"] == 0.5


def test_unknown_metric_rejected(tmp_path, cfg):
    hyp = load_corpus(write_corpus(tmp_path, "h.txt", ["a"]))
    with pytest.raises(InputError, match="unknown metric"):
        score_corpus(hyp, hyp, cfg, metrics=("bleu", "ter"))


class TestFixedPrecisionJson:
    def test_floats_have_six_decimals(self):
        text = dumps_fixed({"value": 1.0, "half": 0.5})
        assert '"value": 1.000000' in text
        assert '"half": 0.500000' in text

    def test_ints_stay_integers(self):
        assert '"m": 9' in dumps_fixed({"m": 9})

    def test_null_bool_and_nesting(self):
        payload = {"a": None, "b": True, "c": [1, 2.0, {"d": False}], "e": {}, "f": []}
        parsed = json.loads(dumps_fixed(payload))
        assert parsed == {"a": None, "b": True, "c": [1, 2.0, {"d": False}], "e": {}, "f": []}

    def test_non_ascii_preserved(self):
        assert "تاج" in dumps_fixed({"text": "تاج"})

    def test_rejects_unknown_types(self):
        with pytest.raises(TypeError):
            dumps_fixed({"bad": object()})


def test_report_round_trip(tmp_path, cfg):
    hyp = load_corpus(write_corpus(tmp_path, "h.txt", ["a b c", "d e f"]))
    ref = load_corpus(write_corpus(tmp_path, "r.txt", ["a b c", "d x f"]))
    report = score_corpus(hyp, ref, cfg)
    out = tmp_path / "report.json"
    write_report(report, str(out))
    loaded = load_report(str(out))
    assert loaded["corpus"]["segments"] == 2
    assert loaded["segments"][0]["scores"]["bleu"]["value"] == 1.0
    assert not (tmp_path / "report.json.tmp").exists()
    assert out.read_text(encoding="utf-8").endswith("\n")


def test_load_report_rejects_garbage(tmp_path):
    path = tmp_path / "x.json"
    path.write_text("not json", encoding="utf-8")
    with pytest.raises(InputError, match="not valid JSON"):
        load_report(str(path))
    path.write_text('{"config": {}}', encoding="utf-8")
    with pytest.raises(InputError, match="segments"):
        load_report(str(path))
