import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mteval import (
    HumanJudgment,
    JudgmentStore,
    average_score,
    normalized_human,
    to_percentage,
)
from mteval.errors import DuplicateJudgmentError, InputError, JudgmentValidationError
from mteval.judgments import PARAMETER_LABELS, SCALE_LABELS

TS = "2026-01-05T10:00:00+00:00"

# three worked ten-parameter score columns with known averages
COLUMN_A = (2, 3, 2, 2, 2, 2, 1, 2, 2, 2)
COLUMN_B = (0, 1, 1, 2, 0, 1, 0, 1, 1, 1)
COLUMN_C = (1, 2, 1, 2, 0, 2, 1, 1, 1, 1)


def judgment(scores=COLUMN_A, segment_id=1, system="sys1", annotator="ann1"):
    return HumanJudgment(segment_id, system, annotator, tuple(scores), TS)


def test_labels_shape():
    assert len(PARAMETER_LABELS) == 10
    assert len(SCALE_LABELS) == 5
    assert SCALE_LABELS[0] == "Not Acceptable (0)"
    assert SCALE_LABELS[-1] == "Ideal (4)"


@pytest.mark.parametrize(
    "scores,avg,pct",
    [(COLUMN_A, 2.0, 50.0), (COLUMN_B, 0.8, 20.0), (COLUMN_C, 1.2, 30.0)],
)
def test_worked_columns(scores, avg, pct):
    j = judgment(scores)
    assert average_score(j) == avg
    assert to_percentage(avg) == pct
    assert normalized_human(avg) == avg / 4


def test_all_zero_scores():
    assert average_score(judgment((0,) * 10)) == 0.0
    assert to_percentage(0.0) == 0.0


def test_scale_maximum():
    assert to_percentage(4.0) == 100.0
    assert normalized_human(4.0) == 1.0


def test_percentage_rejects_out_of_range():
    with pytest.raises(InputError):
        to_percentage(4.2)
    with pytest.raises(InputError):
        to_percentage(-0.1)


@given(st.lists(st.integers(0, 4), min_size=10, max_size=10))
def test_percentage_is_scaled_normalization(scores):
    avg = average_score(judgment(tuple(scores)))
    assert to_percentage(avg) == pytest.approx(100 * normalized_human(avg))


@given(st.permutations(list(COLUMN_A)))
def test_average_is_permutation_invariant(scores):
    assert average_score(judgment(tuple(scores))) == average_score(judgment(COLUMN_A))


class TestValidation:
    def test_wrong_score_count(self):
        with pytest.raises(JudgmentValidationError, match="scores"):
            judgment((1,) * 9)

    def test_score_out_of_range(self):
        with pytest.raises(JudgmentValidationError, match="0..4"):
            judgment((5,) + (1,) * 9)

    def test_non_integer_score(self):
        with pytest.raises(JudgmentValidationError, match="integer"):
            judgment((1.5,) + (1,) * 9)

    def test_bool_is_not_a_score(self):
        with pytest.raises(JudgmentValidationError, match="integer"):
            judgment((True,) + (1,) * 9)

    def test_empty_system(self):
        with pytest.raises(JudgmentValidationError, match="system"):
            HumanJudgment(1, "", "ann1", COLUMN_A, TS)

    def test_negative_segment_id(self):
        with pytest.raises(JudgmentValidationError, match="segment_id"):
            HumanJudgment(-1, "sys1", "ann1", COLUMN_A, TS)

    def test_bad_timestamp(self):
        with pytest.raises(JudgmentValidationError, match="ISO-8601"):
            HumanJudgment(1, "sys1", "ann1", COLUMN_A, "yesterday")

    def test_zulu_timestamp_accepted(self):
        HumanJudgment(1, "sys1", "ann1", COLUMN_A, "2026-01-05T10:00:00Z")

    def test_from_dict_missing_field(self):
        with pytest.raises(JudgmentValidationError, match="timestamp"):
            HumanJudgment.from_dict(
                {"segment_id": 1, "system": "s", "annotator": "a", "scores": list(COLUMN_A)}
            )

    def test_from_dict_unknown_field(self):
        payload = {
            "segment_id": 1, "system": "s", "annotator": "a",
            "scores": list(COLUMN_A), "timestamp": TS, "extra": 1,
        }
        with pytest.raises(JudgmentValidationError, match="extra"):
            HumanJudgment.from_dict(payload)


class TestStore:
    def test_append_order_preserved(self):
        store = JudgmentStore()
        first = judgment(segment_id=2)
        second = judgment(segment_id=1)
        store.append(first)
        store.append(second)
        assert list(store) == [first, second]

    def test_duplicate_key_rejected(self):
        store = JudgmentStore()
        store.append(judgment())
        with pytest.raises(DuplicateJudgmentError):
            store.append(judgment())
        # same segment, different annotator is fine
        store.append(judgment(annotator="ann2"))
        assert len(store) == 2

    def test_jsonl_line_schema(self):
        line = judgment().to_json_line()
        assert line == (
            '{"segment_id":1,"system":"sys1","annotator":"ann1",'
            '"scores":[2,3,2,2,2,2,1,2,2,2],"timestamp":"%s"}' % TS
        )
        assert json.loads(line)["scores"] == list(COLUMN_A)

    def test_file_round_trip(self, tmp_path):
        path = str(tmp_path / "judgments.jsonl")
        store = JudgmentStore(path)
        rows = [judgment(segment_id=i) for i in (3, 1, 2)]
        for row in rows:
            store.append(row)
        store.close()
        reloaded = JudgmentStore.load(path)
        assert list(reloaded) == rows

    def test_reopening_backed_store_resumes(self, tmp_path):
        path = str(tmp_path / "judgments.jsonl")
        store = JudgmentStore(path)
        store.append(judgment())
        store.close()
        resumed = JudgmentStore(path)
        with pytest.raises(DuplicateJudgmentError):
            resumed.append(judgment())
        resumed.append(judgment(annotator="ann2"))
        resumed.close()
        assert len(JudgmentStore.load(path)) == 2

    def test_load_rejects_corrupt_line(self, tmp_path):
        path = tmp_path / "judgments.jsonl"
        path.write_text('{"nope": 1}\n', encoding="utf-8")
        with pytest.raises(InputError, match="judgments.jsonl:1"):
            JudgmentStore.load(str(path))

    def test_load_rejects_duplicate_lines(self, tmp_path):
        path = tmp_path / "judgments.jsonl"
        line = judgment().to_json_line()
        path.write_text(line + "\n" + line + "\n", encoding="utf-8")
        with pytest.raises(DuplicateJudgmentError):
            JudgmentStore.load(str(path))

    def test_for_system_and_systems(self):
        store = JudgmentStore()
        store.append(judgment(system="sys1"))
        store.append(judgment(system="sys2"))
        assert store.systems() == ["sys1", "sys2"]
        assert [j.system for j in store.for_system("sys1")] == ["sys1"]
