"""Corpus loading, normalization, tokenization, and length filtering.

All pipeline-internal text is lowercase with punctuation split into
separate tokens; joining tokens with single spaces reproduces the
normalized surface form. Final rendered output re-capitalizes sentence
starts (see :func:`sarcgen.pipeline.render_sentence`).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, Protocol, Sequence

from .errors import EmptyCorpusError, EmptyTextError

_MENTION_RE = re.compile(r"@\w+")
_HASHTAG_RE = re.compile(r"#(\w)")
# A token is either a word (letters/digits, optionally joined by internal
# apostrophes or hyphens: "don't", "incarcerated-under") or a single
# non-space, non-word character.
_TOKEN_RE = re.compile(r"\w+(?:['-]\w+)*|[^\w\s]")
_WORD_RE = re.compile(r"\w")


class Polarity(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class RawRecord:
    """One corpus line before tokenization."""

    text: str
    polarity: Polarity = Polarity.UNKNOWN
    source_id: str = ""

    def __post_init__(self):
        if not self.text.strip():
            raise EmptyTextError("RawRecord.text must be non-empty after trimming")


@dataclass(frozen=True)
class Utterance:
    """A normalized, tokenized sentence."""

    tokens: tuple[str, ...]
    original: str = ""
    polarity: Polarity = Polarity.UNKNOWN

    def __post_init__(self):
        if len(self.tokens) < 1:
            raise EmptyTextError("Utterance requires at least one token")
        object.__setattr__(self, "tokens", tuple(self.tokens))

    @property
    def text(self) -> str:
        """The normalized surface form (tokens joined by single spaces)."""
        return " ".join(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


class SpellCorrector(Protocol):
    """Optional per-token spell checker plugged into normalization."""

    def correct(self, token: str) -> str:  # pragma: no cover - interface
        ...


def is_punctuation(token: str) -> bool:
    """True for tokens carrying no word character."""
    return not _WORD_RE.search(token)


def word_count(tokens: Iterable[str]) -> int:
    """Number of non-punctuation tokens."""
    return sum(1 for t in tokens if not is_punctuation(t))


def load_normalization_table(path: str | Path | None = None) -> dict[str, str]:
    """Read the two-column TSV (variant, canonical) lexical table.

    Without a path the table shipped with the package is used. Lines
    starting with ``#`` are comments. Canonical forms may contain spaces
    (multi-token replacements).
    """
    if path is None:
        text = resources.files("sarcgen.data").joinpath("normalization.tsv").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    table = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        variant, _, canonical = line.partition("\t")
        if variant and canonical:
            table[variant.strip().lower()] = canonical.strip().lower()
    return table


_DEFAULT_TABLE: dict[str, str] | None = None


def _default_table() -> dict[str, str]:
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = load_normalization_table()
    return _DEFAULT_TABLE


def tokenize(text: str) -> list[str]:
    """Whitespace-and-punctuation tokenization; punctuation marks are tokens.

    Deterministic; empty text yields an empty list.
    """
    return _TOKEN_RE.findall(text)


def normalize_text(
    raw: str,
    table: dict[str, str] | None = None,
    corrector: SpellCorrector | None = None,
) -> str:
    """Normalize raw text to the pipeline's internal surface form.

    User mentions are removed, hashtag markers stripped (the word is
    kept), text is lowercased, the lexical substitution table applied per
    token, punctuation split into separate tokens, and single spaces used
    throughout. Spell correction runs only when ``corrector`` is given.

    Raises :class:`EmptyTextError` when nothing survives.
    """
    if table is None:
        table = _default_table()
    text = _MENTION_RE.sub(" ", raw)
    text = _HASHTAG_RE.sub(r"\1", text)
    text = text.lower()
    tokens = []
    for tok in tokenize(text):
        repl = table.get(tok)
        if repl is not None:
            tokens.extend(repl.split())
        else:
            tokens.append(tok)
    if corrector is not None:
        tokens = [corrector.correct(t) if not is_punctuation(t) else t for t in tokens]
    if not tokens:
        raise EmptyTextError(f"text is empty after normalization: {raw!r}")
    return " ".join(tokens)


def make_utterance(
    raw: str,
    polarity: Polarity = Polarity.UNKNOWN,
    table: dict[str, str] | None = None,
    corrector: SpellCorrector | None = None,
) -> Utterance:
    """Normalize and tokenize ``raw`` into an :class:`Utterance`."""
    normalized = normalize_text(raw, table=table, corrector=corrector)
    return Utterance(tokens=tuple(tokenize(normalized)), original=raw, polarity=polarity)


def load_sentiment_corpus(path: str | Path, polarity: Polarity) -> list[RawRecord]:
    """Load a one-sentence-per-line corpus file, tagging every record.

    Blank lines are skipped; file order is preserved. Raises
    ``FileNotFoundError`` for a missing file and
    :class:`EmptyCorpusError` when no usable line remains.
    """
    path = Path(path)
    records = []
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            records.append(RawRecord(text=text, polarity=polarity, source_id=f"{path.name}:{lineno}"))
    if not records:
        raise EmptyCorpusError(f"no usable lines in {path}")
    return records


def filter_by_length(records: Sequence[RawRecord], max_tokens: int = 30) -> list[RawRecord]:
    """Keep records with at most ``max_tokens`` words.

    Punctuation tokens do not count as words. Order is preserved and the
    result is a subset of the input.
    """
    return [r for r in records if word_count(tokenize(r.text)) <= max_tokens]
