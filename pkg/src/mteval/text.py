"""Segment representation, Unicode normalization and tokenization.

Everything downstream (alignment, metrics) consumes TokenizedSegment values
produced here, so the rules are deliberately small and deterministic:
NFC + whitespace collapse + lowercase, whitespace split, punctuation
codepoints detached as single-character tokens, relative token positions
(i+1)/length.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field

from .errors import InputError

# Combining marks used with Arabic-script text (harakat and friends).
# Stripping them is opt-in; by default they are preserved.
_ARABIC_DIACRITIC_RANGES = (
    (0x064B, 0x065F),
    (0x0670, 0x0670),
    (0x06D6, 0x06DC),
    (0x06DF, 0x06E4),
    (0x06E7, 0x06E8),
    (0x06EA, 0x06ED),
)
_ARABIC_DIACRITICS = frozenset(
    chr(c) for lo, hi in _ARABIC_DIACRITIC_RANGES for c in range(lo, hi + 1)
)


def _is_punctuation(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def is_punctuation_token(token: str) -> bool:
    """True when every codepoint of the token is punctuation."""
    return bool(token) and all(_is_punctuation(ch) for ch in token)


def normalize(text: str, strip_diacritics: bool = False) -> str:
    """Canonicalize a segment: NFC, collapsed whitespace, lowercased letters.

    Arabic-script text passes through unchanged apart from NFC (it has no
    case); `strip_diacritics=True` additionally removes Arabic combining
    marks such as harakat.
    """
    text = unicodedata.normalize("NFC", text)
    if strip_diacritics:
        text = "".join(ch for ch in text if ch not in _ARABIC_DIACRITICS)
    return " ".join(text.lower().split())


@dataclass(slots=True)
class Segment:
    """One corpus line: a 1-based id and its normalized text."""

    id: int
    text: str


@dataclass(slots=True)
class TokenizedSegment:
    """Ordered tokens plus each token's relative position (i+1)/length.

    For a non-empty segment the positions are strictly increasing and the
    last one is exactly 1.0. Build via `from_tokens` (or `tokenize`);
    constructing directly with other positions is only for feeding
    externally-defined position tables through `position_difference`.
    """

    tokens: tuple[str, ...]
    relative_positions: tuple[float, ...] = field(default=())

    @classmethod
    def from_tokens(cls, tokens: tuple[str, ...] | list[str]) -> "TokenizedSegment":
        toks = tuple(tokens)
        n = len(toks)
        return cls(toks, tuple((i + 1) / n for i in range(n)))

    @property
    def length(self) -> int:
        return len(self.tokens)

    def without_punctuation(self) -> "TokenizedSegment":
        """Copy with punctuation tokens removed and positions recomputed."""
        return TokenizedSegment.from_tokens(
            [t for t in self.tokens if not is_punctuation_token(t)]
        )


def tokenize(text: str) -> TokenizedSegment:
    """Split normalized text on whitespace, detaching punctuation codepoints.

    Every punctuation character (including Arabic "،" and "۔") becomes its
    own token, so "employee." -> ["employee", "."]. Empty text yields an
    empty segment.
    """
    tokens: list[str] = []
    for chunk in text.split():
        word_start = 0
        for i, ch in enumerate(chunk):
            if _is_punctuation(ch):
                if i > word_start:
                    tokens.append(chunk[word_start:i])
                tokens.append(ch)
                word_start = i + 1
        if word_start < len(chunk):
            tokens.append(chunk[word_start:])
    return TokenizedSegment.from_tokens(tokens)


@dataclass(slots=True)
class Document:
    """A named contiguous range of segment ids (1-based, inclusive)."""

    name: str
    start_id: int
    end_id: int

    def contains(self, segment_id: int) -> bool:
        return self.start_id <= segment_id <= self.end_id


@dataclass(slots=True)
class CorpusSide:
    """One side of a scoring corpus: ordered segments plus document ranges."""

    segments: list[Segment]
    documents: list[Document]

    def __len__(self) -> int:
        return len(self.segments)


def _decode_utf8(raw: bytes, path: str) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(
            f"{path}: invalid UTF-8 at byte offset {exc.start}: {exc.reason}"
        ) from exc


def load_corpus(
    path: str,
    manifest_path: str | None = None,
    strip_diacritics: bool = False,
) -> CorpusSide:
    """Read a one-segment-per-line UTF-8 corpus; line numbers are segment ids.

    `manifest_path`, when given, is a TSV of `doc_name<TAB>start<TAB>end`
    line ranges that must cover all segments without overlap. Without a
    manifest the whole corpus is a single document named "all".
    """
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read corpus file {path}: {exc}") from exc
    text = _decode_utf8(raw, path)
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    segments = [
        Segment(i + 1, normalize(line, strip_diacritics=strip_diacritics))
        for i, line in enumerate(lines)
    ]
    if manifest_path is None:
        documents = [Document("all", 1, len(segments))]
    else:
        documents = _load_manifest(manifest_path, len(segments))
    return CorpusSide(segments, documents)


def load_plain_lines(path: str) -> dict[int, str]:
    """Segment id -> verbatim line (NFC only), for human-facing display.

    The annotation service shows text to people, so unlike `load_corpus`
    this keeps case and spacing as authored.
    """
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read corpus file {path}: {exc}") from exc
    lines = _decode_utf8(raw, path).split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return {
        i + 1: unicodedata.normalize("NFC", line) for i, line in enumerate(lines)
    }


def _load_manifest(path: str, segment_count: int) -> list[Document]:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read document manifest {path}: {exc}") from exc
    documents: list[Document] = []
    for lineno, line in enumerate(_decode_utf8(raw, path).splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.rstrip("\n").split("\t")
        if len(cols) != 3:
            raise InputError(
                f"{path}:{lineno}: expected doc_name<TAB>start<TAB>end, got {len(cols)} column(s)"
            )
        name = cols[0]
        try:
            start, end = int(cols[1]), int(cols[2])
        except ValueError as exc:
            raise InputError(f"{path}:{lineno}: non-integer line range") from exc
        if start < 1 or end < start:
            raise InputError(f"{path}:{lineno}: invalid range {start}..{end}")
        documents.append(Document(name, start, end))
    documents.sort(key=lambda d: d.start_id)
    expected_next = 1
    for doc in documents:
        if doc.start_id != expected_next:
            raise InputError(
                f"{path}: documents must cover segments contiguously; "
                f"expected a document starting at line {expected_next}, got {doc.start_id}"
            )
        expected_next = doc.end_id + 1
    if expected_next != segment_count + 1:
        raise InputError(
            f"{path}: documents cover lines 1..{expected_next - 1} "
            f"but the corpus has {segment_count} segment(s)"
        )
    if len({d.name for d in documents}) != len(documents):
        raise InputError(f"{path}: duplicate document names")
    return documents
