"""HTTP annotation service backing the browser UI.

Endpoints (versioned under /api/v1):
  GET  /api/v1/parameters        the ten parameter labels and the 0-4 scale
  GET  /api/v1/tasks/next        next unjudged task for ?annotator=<id>
  POST /api/v1/judgments         validate, durably append, acknowledge
  GET  /api/v1/progress          per-annotator completion counts

Tasks walk segments in id order; within a segment the system order is
shuffled with a per-annotator seed so position never leaks system identity.
The response carries the real system name (the client must post it back)
next to a blinded display label; compliant clients only render the label.
"""

from __future__ import annotations

import hashlib
import random

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from .errors import DuplicateJudgmentError, JudgmentValidationError
from .judgments import (
    PARAMETER_LABELS,
    SCALE_LABELS,
    HumanJudgment,
    JudgmentStore,
)

_BLIND_NAMES = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _system_order(annotator: str, segment_id: int, systems: list[str]) -> list[str]:
    digest = hashlib.sha256(f"{annotator}\x00{segment_id}".encode()).digest()
    rng = random.Random(int.from_bytes(digest[:8], "big"))
    order = list(systems)
    rng.shuffle(order)
    return order


def create_app(
    source_texts: dict[int, str],
    system_texts: dict[str, dict[int, str]],
    store: JudgmentStore,
    ui_dir: str | None = None,
) -> FastAPI:
    """Wire the API around loaded corpora and a (usually file-backed) store."""
    app = FastAPI(title="mteval annotation service")
    systems = sorted(system_texts)
    segment_ids = sorted(source_texts)
    total_per_annotator = len(segment_ids) * len(systems)

    @app.get("/api/v1/parameters")
    def parameters() -> dict:
        return {"parameters": list(PARAMETER_LABELS), "scale": list(SCALE_LABELS)}

    @app.get("/api/v1/tasks/next")
    def next_task(annotator: str = Query(min_length=1)) -> Response:
        done = 0
        for segment_id in segment_ids:
            # label by shuffled position, not by system, so "Output A" never
            # means the same engine twice
            for position, system in enumerate(
                _system_order(annotator, segment_id, systems)
            ):
                if store.has(segment_id, system, annotator):
                    done += 1
                    continue
                blind = _BLIND_NAMES[position % len(_BLIND_NAMES)]
                return JSONResponse(
                    {
                        "segment_id": segment_id,
                        "source_text": source_texts[segment_id],
                        "hypothesis_text": system_texts[system][segment_id],
                        "system": system,
                        "blinded_label": f"Output {blind}",
                        "done": done,
                        "total": total_per_annotator,
                    }
                )
        return Response(status_code=204)

    @app.post("/api/v1/judgments", status_code=201)
    async def post_judgment(request: Request) -> Response:
        try:
            payload = await request.json()
        except Exception:
            return JSONResponse(
                {"detail": {"field": "body", "message": "not valid JSON"}},
                status_code=400,
            )
        if not isinstance(payload, dict):
            return JSONResponse(
                {"detail": {"field": "body", "message": "expected an object"}},
                status_code=400,
            )
        try:
            judgment = HumanJudgment.from_dict(payload)
        except JudgmentValidationError as exc:
            return JSONResponse(
                {"detail": {"field": exc.field, "message": exc.message}},
                status_code=400,
            )
        if judgment.segment_id not in source_texts:
            return JSONResponse(
                {"detail": {"field": "segment_id",
                            "message": f"unknown segment {judgment.segment_id}"}},
                status_code=400,
            )
        if judgment.system not in system_texts:
            return JSONResponse(
                {"detail": {"field": "system",
                            "message": f"unknown system {judgment.system!r}"}},
                status_code=400,
            )
        try:
            store.append(judgment)
        except DuplicateJudgmentError as exc:
            return JSONResponse({"detail": str(exc)}, status_code=409)
        return JSONResponse(
            {
                "segment_id": judgment.segment_id,
                "system": judgment.system,
                "annotator": judgment.annotator,
                "scores": list(judgment.scores),
                "timestamp": judgment.timestamp,
            },
            status_code=201,
        )

    @app.get("/api/v1/progress")
    def progress() -> dict:
        by_annotator: dict[str, int] = {}
        for judgment in store:
            by_annotator[judgment.annotator] = by_annotator.get(judgment.annotator, 0) + 1
        return {
            "segments": len(segment_ids),
            "systems": len(systems),
            "total_per_annotator": total_per_annotator,
            "judgments": len(store),
            "by_annotator": dict(sorted(by_annotator.items())),
        }

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    else:

        @app.get("/")
        def index() -> dict:
            return {
                "service": "mteval annotation service",
                "api": "/api/v1",
                "note": "no UI bundle configured; pass --ui-dir to serve one",
            }

    return app
