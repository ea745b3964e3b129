"""One-to-one unigram alignment between hypothesis and reference tokens.

Matching runs in three passes, each over the tokens the previous passes
left unmatched: surface equality, then stem equality, then synonymy.
Within a pass every hypothesis token (left to right) takes the available
reference token closest in relative position, ties going to the smaller
reference index. Distances compare the exact integers
|(i+1)*|ref| - (j+1)*|hyp|| so that rational ties are honored, which float
subtraction of (i+1)/length values would not guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .resources import StemTable, SynonymLexicon
from .text import TokenizedSegment

EXACT = "exact"
STEM = "stem"
SYNONYM = "synonym"
STAGES = (EXACT, STEM, SYNONYM)

# One matched pair: (hypothesis token index, reference token index, stage).
Pair = tuple[int, int, str]


@dataclass(slots=True)
class Alignment:
    """Matched pairs sorted by hypothesis index, with m and chunk counts."""

    pairs: list[Pair]
    m: int
    chunks: int


def align_unigrams(
    hyp: TokenizedSegment,
    ref: TokenizedSegment,
    stems: StemTable | None = None,
    synonyms: SynonymLexicon | None = None,
) -> Alignment:
    """Greedy maximal matching in fixed stage order exact -> stem -> synonym.

    Either side empty yields an empty alignment. With an empty stem table or
    lexicon the corresponding pass can never add a pair (surface-equal
    leftovers are impossible after the exact pass), so it is skipped.
    """
    lh, lr = hyp.length, ref.length
    pairs: list[Pair] = []
    if lh and lr:
        hyp_matched = [False] * lh
        ref_free = [True] * lr
        for stage in STAGES:
            if stage == STEM:
                if not stems:
                    continue
                hyp_keys = [stems.stem_of(t) for t in hyp.tokens]
                ref_keys = [stems.stem_of(t) for t in ref.tokens]
            elif stage == SYNONYM:
                if not synonyms:
                    continue
                hyp_syn = [synonyms.synset_ids(t) for t in hyp.tokens]
                ref_syn = [synonyms.synset_ids(t) for t in ref.tokens]
            for i in range(lh):
                if hyp_matched[i]:
                    continue
                best_j = -1
                best_d = 0
                for j in range(lr):
                    if not ref_free[j]:
                        continue
                    if stage == EXACT:
                        ok = hyp.tokens[i] == ref.tokens[j]
                    elif stage == STEM:
                        ok = hyp_keys[i] == ref_keys[j]
                    else:
                        ok = (
                            hyp.tokens[i] != ref.tokens[j]
                            and bool(hyp_syn[i])
                            and not hyp_syn[i].isdisjoint(ref_syn[j])
                        )
                    if not ok:
                        continue
                    d = abs((i + 1) * lr - (j + 1) * lh)
                    if best_j < 0 or d < best_d:
                        best_j, best_d = j, d
                if best_j >= 0:
                    hyp_matched[i] = True
                    ref_free[best_j] = False
                    pairs.append((i, best_j, stage))
        pairs.sort(key=lambda p: p[0])
    return Alignment(pairs, len(pairs), _count_runs(pairs))


def count_chunks(alignment: Alignment) -> int:
    """Number of maximal runs of pairs contiguous in both strings."""
    return _count_runs(alignment.pairs)


def _count_runs(pairs: list[Pair]) -> int:
    chunks = 0
    prev_h = prev_r = -2
    for h, r, _ in pairs:
        if h != prev_h + 1 or r != prev_r + 1:
            chunks += 1
        prev_h, prev_r = h, r
    return chunks


def position_difference(
    alignment: Alignment, hyp: TokenizedSegment, ref: TokenizedSegment
) -> float:
    """Sum of |relative position difference| over matched pairs, over |hyp|.

    An empty hypothesis has no matched pairs and scores 0 by definition.
    The result always lies in [0, 1).
    """
    if hyp.length == 0:
        return 0.0
    hp = hyp.relative_positions
    rp = ref.relative_positions
    total = math.fsum(abs(hp[i] - rp[j]) for i, j, _ in alignment.pairs)
    return total / hyp.length
