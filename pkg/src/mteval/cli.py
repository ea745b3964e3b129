"""Command-line interface: score, correlate, annotate-export, serve, tokenize.

Exit codes: 0 success, 2 input error, 3 insufficient data, 4 internal error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys

from . import correlation as corr
from .errors import InputError, InsufficientDataError, MtevalError
from .judgments import JudgmentStore, average_score, normalized_human, to_percentage
from .metrics import METRICS, MetricConfig
from .resources import StemTable, SynonymLexicon, load_stems, load_synonyms
from .scoring import load_report, score_corpus, write_json, write_report
from .text import load_corpus, load_plain_lines, tokenize


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mteval",
        description="Score MT output with BLEU/GTM/METEOR/ATEC, collect human "
        "judgments, and correlate the two.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser("score", help="score a hypothesis corpus against a reference")
    p_score.add_argument("--hyp", required=True, help="hypothesis corpus, one segment per line")
    p_score.add_argument("--ref", required=True, help="reference corpus, one segment per line")
    p_score.add_argument("--stems", help="surface<TAB>stem TSV for METEOR/ATEC backoff")
    p_score.add_argument("--synonyms", help="one synset per line, members tab-separated")
    p_score.add_argument("--metrics", default=",".join(METRICS),
                         help="comma-separated subset of bleu,gtm,meteor,atec")
    p_score.add_argument("--n", type=int, default=4, help="max n-gram order for BLEU")
    p_score.add_argument("--meteor-penalty", choices=["paper", "classic"], default="paper")
    p_score.add_argument("--atec-coefficient", type=float, default=4.0)
    p_score.add_argument("--keep-punctuation", action="store_true",
                         help="score punctuation tokens instead of stripping them")
    p_score.add_argument("--strip-diacritics", action="store_true",
                         help="remove Arabic-script combining marks before scoring")
    p_score.add_argument("--smooth", type=float, metavar="EPSILON",
                         help="replace zero n-gram precisions with EPSILON")
    p_score.add_argument("--docs", help="document manifest: name<TAB>start<TAB>end")
    p_score.add_argument("--workers", type=int, default=1)
    p_score.add_argument("--verbose", action="store_true",
                         help="embed alignment pair dumps in the report")
    p_score.add_argument("--out", help="write the JSON report here")
    p_score.set_defaults(func=cmd_score)

    p_corr = sub.add_parser("correlate", help="correlate a report with human judgments")
    p_corr.add_argument("--report", required=True)
    p_corr.add_argument("--judgments", required=True)
    p_corr.add_argument("--level", choices=["sentence", "corpus"], required=True)
    p_corr.add_argument("--system", required=True)
    p_corr.add_argument("--metric", default="all",
                        help="one metric name, or 'all' for every metric in the report")
    p_corr.add_argument("--out", help="write the correlation JSON here")
    p_corr.set_defaults(func=cmd_correlate)

    p_export = sub.add_parser("annotate-export",
                              help="summarize a judgment store per system and segment")
    p_export.add_argument("--judgments", required=True)
    p_export.add_argument("--out", help="write the summary JSON here")
    p_export.set_defaults(func=cmd_annotate_export)

    p_serve = sub.add_parser("serve", help="run the annotation service")
    p_serve.add_argument("--source", required=True, help="source-language corpus shown to annotators")
    p_serve.add_argument("--hyp", action="append", required=True, metavar="NAME=PATH",
                         help="system output corpus; repeat per system")
    p_serve.add_argument("--judgments", required=True, help="JSONL store to append to")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int,
                         default=int(os.environ.get("MTEVAL_PORT", "8000")))
    p_serve.add_argument("--ui-dir", help="static UI bundle (default: ./frontend/dist if present)")
    p_serve.set_defaults(func=cmd_serve)

    p_tok = sub.add_parser("tokenize", help="dump tokens and relative positions")
    p_tok.add_argument("--in", dest="input", required=True)
    p_tok.add_argument("--strip-punctuation", action="store_true",
                       help="preview the token stream the metrics score by default")
    p_tok.add_argument("--strip-diacritics", action="store_true")
    p_tok.set_defaults(func=cmd_tokenize)

    return parser


def _sha256(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 16), b""):
            digest.update(block)
    return digest.hexdigest()


def cmd_score(args: argparse.Namespace) -> int:
    metrics = tuple(m.strip() for m in args.metrics.split(",") if m.strip())
    for metric in metrics:
        if metric not in METRICS:
            raise InputError(f"unknown metric {metric!r}; choose from {','.join(METRICS)}")
    metrics = tuple(m for m in METRICS if m in metrics)
    if args.workers < 1:
        raise InputError(f"--workers must be >= 1, got {args.workers}")
    cfg = MetricConfig(
        max_n=args.n,
        meteor_penalty_mode=args.meteor_penalty,
        atec_coefficient=args.atec_coefficient,
        strip_punctuation=not args.keep_punctuation,
        smooth_epsilon=args.smooth,
        include_alignment=args.verbose,
    )
    hyps = load_corpus(args.hyp, strip_diacritics=args.strip_diacritics)
    refs = load_corpus(args.ref, manifest_path=args.docs,
                       strip_diacritics=args.strip_diacritics)
    stems = load_stems(args.stems) if args.stems else StemTable()
    synonyms = load_synonyms(args.synonyms) if args.synonyms else SynonymLexicon()
    config_extras = {
        "strip_diacritics": args.strip_diacritics,
        "stems_sha256": _sha256(args.stems) if args.stems else None,
        "synonyms_sha256": _sha256(args.synonyms) if args.synonyms else None,
    }
    report = score_corpus(
        hyps, refs, cfg,
        stems=stems, synonyms=synonyms, metrics=metrics,
        workers=args.workers, config_extras=config_extras,
    )
    if args.out:
        write_report(report, args.out)
    print(f"segments: {report.corpus['segments']}   documents: {len(report.documents)}")
    for metric in metrics:
        print(f"{metric:<8} {report.corpus['means'][metric]:.6f}")
    if args.out:
        print(f"report written to {args.out}")
    return 0


def cmd_correlate(args: argparse.Namespace) -> int:
    report = load_report(args.report)
    store = JudgmentStore.load(args.judgments)
    if args.metric == "all":
        metrics = [m for m in METRICS if m in report["config"]["metrics"]]
    else:
        if args.metric not in METRICS:
            raise InputError(f"unknown metric {args.metric!r}")
        metrics = [args.metric]
    level_fn = corr.sentence_level if args.level == "sentence" else corr.corpus_level
    results = [level_fn(report, store, args.system, metric) for metric in metrics]
    payload = {
        "inputs": {
            "report_sha256": _sha256(args.report),
            "judgments_sha256": _sha256(args.judgments),
        },
        "results": [r.to_dict() for r in results],
    }
    if args.out:
        write_json(payload, args.out)
    for r in results:
        shown = "undefined" if r.r is None else f"{r.r:.6f}"
        print(f"{r.system} {r.metric} {r.level}-level r={shown} n={r.n}")
    return 0


def cmd_annotate_export(args: argparse.Namespace) -> int:
    store = JudgmentStore.load(args.judgments)
    systems_block: dict = {}
    for system in store.systems():
        judgments = store.for_system(system)
        per_segment: dict[int, list] = {}
        for judgment in judgments:
            per_segment.setdefault(judgment.segment_id, []).append(judgment)
        rows = []
        for sid in sorted(per_segment):
            avgs = [average_score(j) for j in per_segment[sid]]
            avg = math.fsum(avgs) / len(avgs)
            rows.append(
                {
                    "id": sid,
                    "annotators": len(avgs),
                    "average": avg,
                    "percentage": to_percentage(avg),
                    "normalized": normalized_human(avg),
                }
            )
        mean_avg = math.fsum(r["average"] for r in rows) / len(rows)
        systems_block[system] = {
            "segments": rows,
            "summary": {
                "segments": len(rows),
                "judgments": len(judgments),
                "mean_average": mean_avg,
                "mean_percentage": to_percentage(mean_avg),
                "mean_normalized": normalized_human(mean_avg),
            },
        }
    payload = {"judgments": len(store), "systems": systems_block}
    if args.out:
        write_json(payload, args.out)
    for system, block in systems_block.items():
        summary = block["summary"]
        print(
            f"{system}: {summary['segments']} segment(s), "
            f"mean average {summary['mean_average']:.2f} "
            f"({summary['mean_percentage']:.0f}%)"
        )
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    source = load_plain_lines(args.source)
    systems: dict[str, dict[int, str]] = {}
    for entry in args.hyp:
        name, sep, path = entry.partition("=")
        if not sep or not name or not path:
            raise InputError(f"--hyp expects NAME=PATH, got {entry!r}")
        if name in systems:
            raise InputError(f"duplicate system name {name!r}")
        texts = load_plain_lines(path)
        if set(texts) != set(source):
            raise InputError(
                f"system {name!r} has {len(texts)} segment(s), source has {len(source)}"
            )
        systems[name] = texts
    if not systems:
        raise InputError("at least one --hyp NAME=PATH is required")
    ui_dir = args.ui_dir
    if ui_dir is None and os.path.isdir(os.path.join("frontend", "dist")):
        ui_dir = os.path.join("frontend", "dist")
    if ui_dir is not None and not os.path.isdir(ui_dir):
        raise InputError(f"UI directory {ui_dir} does not exist")
    store = JudgmentStore(args.judgments)
    app = create_app(source, systems, store, ui_dir=ui_dir)
    print(f"annotation service on http://{args.host}:{args.port} "
          f"({len(source)} segments x {len(systems)} systems)")
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def cmd_tokenize(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.input, strip_diacritics=args.strip_diacritics)
    for segment in corpus.segments:
        tokenized = tokenize(segment.text)
        if args.strip_punctuation:
            tokenized = tokenized.without_punctuation()
        print(
            json.dumps(
                {
                    "id": segment.id,
                    "tokens": list(tokenized.tokens),
                    "relative_positions": [
                        round(p, 6) for p in tokenized.relative_positions
                    ],
                },
                ensure_ascii=False,
            )
        )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InsufficientDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MtevalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    except BrokenPipeError:
        # stdout went away (e.g. piped into head); die quietly like cat does
        try:
            sys.stdout.close()
        except OSError:
            pass
        return 0
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
