"""Seeded synthetic corpora for determinism checks and correlation studies.

Real multi-system evaluation data is rarely redistributable, so experiments
here run on generated hypothesis/reference pairs: references are random
sentences over a pseudo-word vocabulary and hypotheses are quality-controlled
corruptions (substitutions, deletions, insertions, adjacent swaps). Human
judgments can then be synthesized from any metric column plus bounded noise.
"""

from __future__ import annotations

import random

from .judgments import MAX_SCORE, N_PARAMETERS, HumanJudgment

_ONSETS = "b d f g k l m n p r s t v z".split()
_VOWELS = "a e i o u".split()


def make_vocab(rng: random.Random, size: int = 150) -> list[str]:
    """Distinct pronounceable pseudo-words, deterministic for a given rng."""
    vocab: set[str] = set()
    while len(vocab) < size:
        syllables = rng.randint(1, 3)
        word = "".join(
            rng.choice(_ONSETS) + rng.choice(_VOWELS) for _ in range(syllables)
        )
        vocab.add(word)
    return sorted(vocab)


def make_reference(rng: random.Random, vocab: list[str],
                   min_len: int = 5, max_len: int = 20) -> list[str]:
    return [rng.choice(vocab) for _ in range(rng.randint(min_len, max_len))]


def corrupt(rng: random.Random, tokens: list[str], vocab: list[str],
            quality: float) -> list[str]:
    """Degrade a sentence; quality 1 returns it verbatim, 0 mangles it."""
    damage = 1.0 - quality
    out: list[str] = []
    for token in tokens:
        roll = rng.random()
        if roll < damage * 0.25:
            continue
        if roll < damage * 0.55:
            out.append(rng.choice(vocab))
        else:
            out.append(token)
        if rng.random() < damage * 0.10:
            out.append(rng.choice(vocab))
    for _ in range(int(damage * len(out) * 0.6)):
        if len(out) < 2:
            break
        i = rng.randrange(len(out) - 1)
        out[i], out[i + 1] = out[i + 1], out[i]
    if not out:
        out = [rng.choice(vocab)]
    return out


def generate_parallel_corpus(
    seed: int,
    n_segments: int,
    systems: list[str],
) -> tuple[list[str], dict[str, list[str]]]:
    """References plus one corrupted hypothesis side per system name.

    Per-segment quality is sampled uniformly, so metric scores spread over
    most of [0, 1].
    """
    rng = random.Random(seed)
    vocab = make_vocab(rng)
    refs: list[str] = []
    hyps: dict[str, list[str]] = {name: [] for name in systems}
    for _ in range(n_segments):
        ref_tokens = make_reference(rng, vocab)
        refs.append(" ".join(ref_tokens))
        for name in systems:
            quality = rng.uniform(0.15, 1.0)
            hyps[name].append(" ".join(corrupt(rng, ref_tokens, vocab, quality)))
    return refs, hyps


def scores_for_target_mean(target_avg: float) -> list[int]:
    """Ten integer scores in 0..4 whose mean is round(target_avg*10)/10.

    The grid step of the mean is 0.1, so the constructed mean differs from
    the target by at most 0.05.
    """
    target_avg = min(float(MAX_SCORE), max(0.0, target_avg))
    total = round(target_avg * N_PARAMETERS)
    base, extra = divmod(total, N_PARAMETERS)
    return [base + 1] * extra + [base] * (N_PARAMETERS - extra)


def judgment_from_metric(
    segment_id: int,
    system: str,
    annotator: str,
    metric_value: float,
    noise: float,
    rng: random.Random,
    timestamp: str = "2026-01-01T00:00:00+00:00",
) -> HumanJudgment:
    """Synthesize a judgment whose normalized mean tracks a metric value.

    `noise` is the half-width of the uniform perturbation added to the
    metric value before clamping to [0, 1].
    """
    target = metric_value + rng.uniform(-noise, noise)
    target = min(1.0, max(0.0, target))
    scores = scores_for_target_mean(target * MAX_SCORE)
    return HumanJudgment(segment_id, system, annotator, tuple(scores), timestamp)
