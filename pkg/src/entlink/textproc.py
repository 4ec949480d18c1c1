"""Tokenization, stop-word filtering and dictionary mention spotting."""
from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Mapping, Optional, Sequence

MAX_ALIAS_TOKENS = 5

_URL_RE = re.compile(r"^(?:[a-z][a-z0-9+.\-]*://|www\.)\S+$", re.IGNORECASE)
_WS_RE = re.compile(r"\S+")


@dataclass(frozen=True)
class Token:
    surface: str
    position: int
    char_span: tuple[int, int]

    @property
    def norm(self) -> str:
        return self.surface.casefold()


@dataclass(frozen=True)
class Mention:
    """A name occurrence to be linked.

    ``token_span`` is inclusive. Injected query-name mentions that do not occur
    in the text carry ``token_span=None``.
    """

    surface: str
    token_span: Optional[tuple[int, int]]
    source: str = "spotted"  # "spotted" | "query_name"


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch)[0] in "PS"


def _strip_bounds(text: str, start: int, end: int) -> tuple[int, int]:
    while start < end and _is_punct(text[start]):
        start += 1
    while end > start and _is_punct(text[end - 1]):
        end -= 1
    return start, end


def tokenize(text: str) -> list[Token]:
    """Whitespace tokenization with per-token punctuation stripping.

    Chunks that look like URLs are dropped. ``char_span`` holds character
    offsets such that ``text[start:end] == token.surface``.
    """
    tokens: list[Token] = []
    for m in _WS_RE.finditer(text):
        start, end = _strip_bounds(text, m.start(), m.end())
        if start == end:
            continue
        if _URL_RE.match(text[start:m.end()]):
            continue
        tokens.append(Token(text[start:end], len(tokens), (start, end)))
    return tokens


@lru_cache(maxsize=1)
def stopwords() -> frozenset[str]:
    raw = resources.files("entlink").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(
        w.strip().casefold() for w in raw.splitlines() if w.strip() and not w.startswith("#")
    )


def is_stopword(word: str) -> bool:
    return word.casefold() in stopwords()


def remove_stopwords(tokens: Sequence[Token]) -> list[Token]:
    stop = stopwords()
    return [t for t in tokens if t.norm not in stop]


def terms(text: str) -> list[str]:
    """Lowercased, stop-word-free index terms of ``text`` in document order."""
    return [t.norm for t in remove_stopwords(tokenize(text))]


def normalize_name(name: str) -> str:
    """Case-fold, collapse whitespace and strip surrounding punctuation."""
    folded = " ".join(name.casefold().split())
    start, end = _strip_bounds(folded, 0, len(folded))
    return folded[start:end]


def _find_token_run(tokens: Sequence[Token], key: str) -> Optional[tuple[int, int]]:
    wanted = key.split()
    n = len(wanted)
    if n == 0:
        return None
    for i in range(len(tokens) - n + 1):
        if all(tokens[i + j].norm == wanted[j] for j in range(n)):
            return (i, i + n - 1)
    return None


def spot_mentions(
    text: str,
    alias_table: Mapping[str, Iterable[str]],
    query_name: Optional[str] = None,
    max_len: int = MAX_ALIAS_TOKENS,
) -> list[Mention]:
    """Greedy longest-leftmost dictionary lookup over token n-grams.

    Mentions made only of stop words are never emitted, which keeps pronouns
    and articles out even if a dump lists them as aliases. When ``query_name``
    is given it is always returned as a mention with ``source="query_name"``.
    """
    tokens = tokenize(text)
    stop = stopwords()
    found: list[Mention] = []
    i = 0
    while i < len(tokens):
        hit = None
        for n in range(min(max_len, len(tokens) - i), 0, -1):
            window = tokens[i:i + n]
            if all(t.norm in stop for t in window):
                continue
            surface = " ".join(t.surface for t in window)
            if normalize_name(surface) in alias_table:
                hit = Mention(surface, (i, i + n - 1), "spotted")
                break
        if hit is None:
            i += 1
        else:
            found.append(hit)
            i = hit.token_span[1] + 1

    if query_name is not None and normalize_name(query_name):
        key = normalize_name(query_name)
        span = _find_token_run(tokens, key)
        if span is not None:
            surface = " ".join(t.surface for t in tokens[span[0]:span[1] + 1])
            found = [
                m for m in found
                if m.token_span[1] < span[0] or m.token_span[0] > span[1]
            ]
            found.append(Mention(surface, span, "query_name"))
        else:
            found.append(Mention(query_name.strip(), None, "query_name"))
        found.sort(key=lambda m: (m.token_span is None, m.token_span or (0, 0)))
    return found
