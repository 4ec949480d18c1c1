"""Candidate generation: alias dictionary hits merged with TF-IDF search hits."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .index import InvertedIndex, search, tfidf_score
from .kb import KnowledgeBase, alias_lookup
from .relatedness import prior
from .textproc import Mention, terms

DEFAULT_K = 20
DEFAULT_CONTEXT_TERMS = 200
SEARCH_MODES = ("surface", "context", "surface+context")


@dataclass(frozen=True)
class Candidate:
    entity_id: str
    name_matched: bool
    relevance: float
    prior: float


def context_terms(text: str, limit: int = DEFAULT_CONTEXT_TERMS) -> list[str]:
    return terms(text)[:limit]


def generate_candidates(
    kb: KnowledgeBase,
    index: InvertedIndex,
    mention: Mention,
    context_tokens: Sequence[str],
    k: int = DEFAULT_K,
    search_mode: str = "surface+context",
) -> list[Candidate]:
    """Union of alias hits and top-``k`` search hits for one mention.

    ``search_mode`` picks the search query: the mention surface, the context,
    or both. Relevance is always scored against surface plus context. Priors
    are normalized over the alias hits when there are any, otherwise over the
    whole list.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if search_mode not in SEARCH_MODES:
        raise ValueError(f"search_mode must be one of {SEARCH_MODES}")
    surface_terms = terms(mention.surface)
    if search_mode == "surface":
        query = surface_terms
    elif search_mode == "context":
        query = list(context_tokens)
    else:
        query = surface_terms + list(context_tokens)

    named = set(alias_lookup(kb, mention.surface))
    found = set(named)
    if query:
        found.update(eid for eid, _ in search(index, query, k))
    if not found:
        return []

    pool = named or found
    rel_query = surface_terms + list(context_tokens)
    out = [
        Candidate(
            entity_id=eid,
            name_matched=eid in named,
            relevance=tfidf_score(index, rel_query, eid) if rel_query else 0.0,
            prior=prior(kb, mention, eid, pool),
        )
        for eid in found
    ]
    out.sort(key=lambda c: (not c.name_matched, -c.relevance, c.entity_id))
    return out
