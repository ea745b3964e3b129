#!/usr/bin/env python3
"""Emit a synthetic parallel corpus for exercising the CLI.

Writes ref.txt, one hypothesis file per system, and a document manifest
splitting the corpus into equal documents:

    python scripts/make_synthetic_corpus.py --out data/ --segments 1000 \
        --systems alpha,bravo,carol --docs 10 --seed 7

Then, for example:

    mteval score --hyp data/alpha.txt --ref data/ref.txt \
        --docs data/docs.tsv --out data/alpha.report.json
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from mteval.synthetic import generate_parallel_corpus


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument("--segments", type=int, default=1000)
    parser.add_argument("--systems", default="alpha,bravo,carol")
    parser.add_argument("--docs", type=int, default=10,
                        help="number of equal documents in the manifest")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    systems = [s.strip() for s in args.systems.split(",") if s.strip()]
    if args.segments % args.docs != 0:
        parser.error("--segments must be divisible by --docs")
    refs, hyps = generate_parallel_corpus(args.seed, args.segments, systems)

    os.makedirs(args.out, exist_ok=True)
    with open(os.path.join(args.out, "ref.txt"), "w", encoding="utf-8") as fh:
        fh.write("\n".join(refs) + "\n")
    for system in systems:
        with open(os.path.join(args.out, f"{system}.txt"), "w", encoding="utf-8") as fh:
            fh.write("\n".join(hyps[system]) + "\n")
    size = args.segments // args.docs
    with open(os.path.join(args.out, "docs.tsv"), "w", encoding="utf-8") as fh:
        for d in range(args.docs):
            fh.write(f"doc{d + 1}\t{d * size + 1}\t{(d + 1) * size}\n")

    print(f"wrote ref.txt, docs.tsv and {len(systems)} hypothesis file(s) "
          f"({args.segments} segments) to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
