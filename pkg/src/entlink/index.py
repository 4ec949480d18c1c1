"""Inverted index over entity documents with TF-IDF scoring."""
from __future__ import annotations

import hashlib
import heapq
import json
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EntityNotFound, IndexFormatError
from .kb import KnowledgeBase, PathLike
from .textproc import terms

INDEX_MAGIC = "ENTLINK-INDEX"
INDEX_VERSION = 1


@dataclass
class InvertedIndex:
    postings: dict[str, list[tuple[str, int]]]
    doc_freq: dict[str, int]
    doc_len: dict[str, int]
    num_docs: int
    kb_digest: str = ""

    def __post_init__(self):
        self._forward: dict[str, dict[str, int]] = {eid: {} for eid in self.doc_len}
        for term, plist in self.postings.items():
            for eid, tf in plist:
                self._forward[eid][term] = tf

    def tf(self, term: str, entity_id: str) -> int:
        return self._forward[entity_id].get(term, 0)

    def idf(self, term: str) -> float:
        return 1.0 + math.log(self.num_docs / (self.doc_freq.get(term, 0) + 1))


def kb_digest(kb: KnowledgeBase) -> str:
    h = hashlib.sha256()
    for eid in sorted(kb.entities):
        h.update(eid.encode("utf-8") + b"\0" + kb.entities[eid].document.encode("utf-8") + b"\0")
    return h.hexdigest()


def build_index(kb: KnowledgeBase) -> InvertedIndex:
    postings: dict[str, list[tuple[str, int]]] = {}
    doc_len: dict[str, int] = {}
    for eid in sorted(kb.entities):
        toks = terms(kb.entities[eid].document)
        doc_len[eid] = len(toks)
        for term, tf in Counter(toks).items():
            postings.setdefault(term, []).append((eid, tf))
    postings = {t: postings[t] for t in sorted(postings)}
    doc_freq = {t: len(p) for t, p in postings.items()}
    return InvertedIndex(postings, doc_freq, doc_len, len(doc_len), kb_digest(kb))


def _query_terms(query_tokens: Iterable[str]) -> list[str]:
    return list(dict.fromkeys(query_tokens))


def tfidf_score(index: InvertedIndex, query_tokens: Sequence[str], entity_id: str) -> float:
    """Practical TF-IDF: sqrt(tf) * idf^2 summed over matched terms, times coord / sqrt(len).

    Repeated query terms count once.
    """
    if entity_id not in index.doc_len:
        raise EntityNotFound(entity_id)
    qterms = _query_terms(query_tokens)
    raw = 0.0
    matched = 0
    for term in qterms:
        tf = index.tf(term, entity_id)
        if tf:
            idf = index.idf(term)
            raw += math.sqrt(tf) * (idf * idf)
            matched += 1
    if not matched:
        return 0.0
    return raw * (matched / len(qterms)) / math.sqrt(index.doc_len[entity_id])


def score_all(index: InvertedIndex, query_tokens: Sequence[str]) -> dict[str, float]:
    """Term-at-a-time scoring of every document that matches at least one query term."""
    qterms = _query_terms(query_tokens)
    raw: dict[str, float] = {}
    matched: Counter = Counter()
    for term in qterms:
        plist = index.postings.get(term)
        if not plist:
            continue
        idf = index.idf(term)
        w = idf * idf
        for eid, tf in plist:
            raw[eid] = raw.get(eid, 0.0) + math.sqrt(tf) * w
            matched[eid] += 1
    n = len(qterms)
    return {eid: s * (matched[eid] / n) / math.sqrt(index.doc_len[eid]) for eid, s in raw.items()}


def search(index: InvertedIndex, query_tokens: Sequence[str], k: int) -> list[tuple[str, float]]:
    if k < 1:
        raise ValueError("k must be >= 1")
    scores = score_all(index, query_tokens)
    return heapq.nsmallest(k, scores.items(), key=lambda kv: (-kv[1], kv[0]))


def save_index(index: InvertedIndex, path: PathLike) -> None:
    body = {
        "num_docs": index.num_docs,
        "kb_digest": index.kb_digest,
        "doc_len": index.doc_len,
        "postings": {t: [[e, tf] for e, tf in p] for t, p in index.postings.items()},
    }
    with Path(path).open("w", encoding="utf-8") as fh:
        fh.write(f"{INDEX_MAGIC} {INDEX_VERSION}\n")
        json.dump(body, fh, ensure_ascii=False, sort_keys=True)
        fh.write("\n")


def load_index(path: PathLike) -> InvertedIndex:
    with Path(path).open(encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2 or header[0] != INDEX_MAGIC:
            raise IndexFormatError(f"{path}: not an entlink index")
        if header[1] != str(INDEX_VERSION):
            raise IndexFormatError(f"{path}: unsupported index version {header[1]}")
        try:
            body = json.load(fh)
        except json.JSONDecodeError as exc:
            raise IndexFormatError(f"{path}: corrupt index body ({exc.msg})") from exc
    try:
        postings = {t: [(e, int(tf)) for e, tf in p] for t, p in body["postings"].items()}
        return InvertedIndex(
            postings=postings,
            doc_freq={t: len(p) for t, p in postings.items()},
            doc_len={e: int(n) for e, n in body["doc_len"].items()},
            num_docs=int(body["num_docs"]),
            kb_digest=body.get("kb_digest", ""),
        )
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise IndexFormatError(f"{path}: malformed index body ({exc!r})") from exc


def check_index(index: InvertedIndex, kb: KnowledgeBase) -> None:
    """Raise if ``index`` was not built from ``kb``."""
    if index.kb_digest != kb_digest(kb):
        raise IndexFormatError("index was built from a different knowledge base")
