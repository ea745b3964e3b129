"""Pluggable stemmer table and synonym lexicon for unigram matching backoff.

Both resources are plain text so they can be hand-edited for any language:
stems are two-column TSV (`surface<TAB>stem`), synonyms are one synset per
line with members tab-separated. The defaults (empty table, empty lexicon)
make every metric runnable with zero external data.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .errors import InputError

log = logging.getLogger(__name__)


@dataclass(slots=True)
class StemTable:
    """surface form -> stem mapping with identity fallback for absent keys."""

    entries: dict[str, str] = field(default_factory=dict)

    def stem_of(self, token: str) -> str:
        return self.entries.get(token, token)

    def __bool__(self) -> bool:
        return bool(self.entries)


@dataclass(slots=True)
class SynonymLexicon:
    """Word sets; two distinct words are synonyms iff they share a synset."""

    synsets: list[frozenset[str]] = field(default_factory=list)
    index: dict[str, set[int]] = field(default_factory=dict)

    @classmethod
    def from_synsets(cls, synsets: list[frozenset[str]]) -> "SynonymLexicon":
        index: dict[str, set[int]] = {}
        for sid, synset in enumerate(synsets):
            for word in synset:
                index.setdefault(word, set()).add(sid)
        return cls(synsets, index)

    def synset_ids(self, token: str) -> set[int]:
        return self.index.get(token, set())

    def __bool__(self) -> bool:
        return bool(self.synsets)


def are_synonyms(a: str, b: str, lexicon: SynonymLexicon) -> bool:
    """True iff a != b and both belong to at least one common synset."""
    if a == b:
        return False
    ids_a = lexicon.index.get(a)
    if not ids_a:
        return False
    ids_b = lexicon.index.get(b)
    return bool(ids_b) and not ids_a.isdisjoint(ids_b)


def load_stems(path: str) -> StemTable:
    """Parse a `surface<TAB>stem` TSV; `#` lines are comments.

    Duplicate surface keys keep the last entry (with a warning). A stem that
    is itself a surface key mapping elsewhere breaks stem_of idempotence, so
    the loader warns about that too.
    """
    entries: dict[str, str] = {}
    for lineno, line in enumerate(_read_lines(path), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise InputError(
                f"{path}:{lineno}: expected surface<TAB>stem, got {len(cols)} column(s)"
            )
        surface, stem = cols[0].strip(), cols[1].strip()
        if not surface or not stem:
            raise InputError(f"{path}:{lineno}: empty surface form or stem")
        if surface in entries:
            log.warning("%s:%d: duplicate surface form %r, last entry wins", path, lineno, surface)
        entries[surface] = stem
    for surface, stem in entries.items():
        if entries.get(stem, stem) != stem:
            log.warning(
                "%s: stem %r (of %r) is itself remapped; stem_of is not idempotent",
                path, stem, surface,
            )
    return StemTable(entries)


def load_synonyms(path: str) -> SynonymLexicon:
    """Parse one synset per line, members tab-separated, at least two each."""
    synsets: list[frozenset[str]] = []
    for lineno, line in enumerate(_read_lines(path), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        members = frozenset(w.strip() for w in line.split("\t") if w.strip())
        if len(members) < 2:
            raise InputError(
                f"{path}:{lineno}: a synset needs at least two distinct members"
            )
        synsets.append(members)
    return SynonymLexicon.from_synsets(synsets)


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read resource file {path}: {exc}") from exc
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(
            f"{path}: invalid UTF-8 at byte offset {exc.start}: {exc.reason}"
        ) from exc
    return text.splitlines()
