import json

import pytest
from fastapi.testclient import TestClient

from mteval.judgments import JudgmentStore
from mteval.service import create_app

TS = "2026-01-05T10:00:00+00:00"


@pytest.fixture
def setup(tmp_path):
    source = {1: "Taj mahal is in india", 2: "It was made by shahjahan"}
    systems = {
        "sysa": {1: "sysa-1", 2: "sysa-2"},
        "sysb": {1: "sysb-1", 2: "sysb-2"},
    }
    store_path = str(tmp_path / "judgments.jsonl")
    store = JudgmentStore(store_path)
    app = create_app(source, systems, store)
    return TestClient(app), store_path


def judgment_body(segment_id, system, annotator="ann1", scores=None):
    return {
        "segment_id": segment_id,
        "system": system,
        "annotator": annotator,
        "scores": scores if scores is not None else [2, 3, 2, 2, 2, 2, 1, 2, 2, 2],
        "timestamp": TS,
    }


def test_parameters_endpoint(setup):
    client, _ = setup
    payload = client.get("/api/v1/parameters").json()
    assert len(payload["parameters"]) == 10
    assert len(payload["scale"]) == 5
    assert payload["scale"][2] == "Acceptable (2)"


def test_task_flow_until_exhaustion(setup):
    client, store_path = setup
    seen = []
    while True:
        response = client.get("/api/v1/tasks/next", params={"annotator": "ann1"})
        if response.status_code == 204:
            break
        task = response.json()
        seen.append((task["segment_id"], task["system"]))
        assert task["source_text"]
        assert task["hypothesis_text"].startswith(task["system"])
        assert task["blinded_label"].startswith("Output ")
        post = client.post("/api/v1/judgments",
                           json=judgment_body(task["segment_id"], task["system"]))
        assert post.status_code == 201
    assert sorted(seen) == [(1, "sysa"), (1, "sysb"), (2, "sysa"), (2, "sysb")]
    # segments are served in id order
    assert [s for s, _ in seen] == [1, 1, 2, 2]
    with open(store_path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    assert len(lines) == 4
    assert all(json.loads(line)["annotator"] == "ann1" for line in lines)


def test_system_order_is_per_annotator_deterministic(setup):
    client, _ = setup
    first = client.get("/api/v1/tasks/next", params={"annotator": "zz"}).json()
    again = client.get("/api/v1/tasks/next", params={"annotator": "zz"}).json()
    assert first["system"] == again["system"]


def test_judgment_validation_errors(setup):
    client, _ = setup
    bad_length = judgment_body(1, "sysa", scores=[1] * 9)
    response = client.post("/api/v1/judgments", json=bad_length)
    assert response.status_code == 400
    assert response.json()["detail"]["field"] == "scores"

    bad_range = judgment_body(1, "sysa", scores=[9] + [1] * 9)
    assert client.post("/api/v1/judgments", json=bad_range).status_code == 400

    unknown_segment = judgment_body(99, "sysa")
    response = client.post("/api/v1/judgments", json=unknown_segment)
    assert response.status_code == 400
    assert response.json()["detail"]["field"] == "segment_id"

    unknown_system = judgment_body(1, "unknown-system")
    response = client.post("/api/v1/judgments", json=unknown_system)
    assert response.status_code == 400
    assert response.json()["detail"]["field"] == "system"

    assert client.post(
        "/api/v1/judgments",
        content=b"not json",
        headers={"content-type": "application/json"},
    ).status_code == 400


def test_duplicate_judgment_conflict(setup):
    client, store_path = setup
    body = judgment_body(1, "sysa")
    assert client.post("/api/v1/judgments", json=body).status_code == 201
    assert client.post("/api/v1/judgments", json=body).status_code == 409
    with open(store_path, encoding="utf-8") as fh:
        assert len(fh.read().splitlines()) == 1


def test_judgment_durable_before_ack(setup):
    client, store_path = setup
    client.post("/api/v1/judgments", json=judgment_body(2, "sysb"))
    with open(store_path, encoding="utf-8") as fh:
        content = fh.read()
    assert content.endswith("\n")
    line = json.loads(content.splitlines()[0])
    assert line["segment_id"] == 2 and line["system"] == "sysb"


def test_tasks_skip_already_judged(setup):
    client, _ = setup
    task = client.get("/api/v1/tasks/next", params={"annotator": "ann1"}).json()
    client.post("/api/v1/judgments",
                json=judgment_body(task["segment_id"], task["system"]))
    following = client.get("/api/v1/tasks/next", params={"annotator": "ann1"}).json()
    assert (following["segment_id"], following["system"]) != (
        task["segment_id"], task["system"]
    )
    # a different annotator still starts from scratch
    fresh = client.get("/api/v1/tasks/next", params={"annotator": "ann2"})
    assert fresh.status_code == 200


def test_progress(setup):
    client, _ = setup
    before = client.get("/api/v1/progress").json()
    assert before["total_per_annotator"] == 4
    assert before["judgments"] == 0
    client.post("/api/v1/judgments", json=judgment_body(1, "sysa"))
    after = client.get("/api/v1/progress").json()
    assert after["judgments"] == 1
    assert after["by_annotator"] == {"ann1": 1}


def test_missing_annotator_param(setup):
    client, _ = setup
    assert client.get("/api/v1/tasks/next").status_code == 422


def test_root_without_ui(setup):
    client, _ = setup
    payload = client.get("/").json()
    assert payload["api"] == "/api/v1"
