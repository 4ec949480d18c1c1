"""Entity-topic disambiguation with a collapsed Gibbs sampler.

Each candidate entity is a topic whose word distribution is seeded with the
term counts of its KB document. Three extra topics sit beside them: an
unseeded domain-field topic, an unseeded NIL topic and a background topic
seeded with corpus-wide term frequencies. Every query token carries a
Beta-Bernoulli switch choosing between the background and the topical part.
Labels are ranked by their posterior mean share of the topical tokens.
"""
from __future__ import annotations

import zlib
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .candidates import DEFAULT_CONTEXT_TERMS, DEFAULT_K, Candidate, context_terms, generate_candidates
from .deadline import Deadline
from .errors import EmptyDocumentError, InvalidQueryError
from .index import InvertedIndex, build_index
from .kb import NIL, DisambiguationResult, KnowledgeBase, Query, rank
from .textproc import Mention, terms

DOMAIN_TOPIC = "<domain>"
BACKGROUND_TOPIC = "<background>"


@dataclass(frozen=True)
class Hyperparameters:
    alpha: float = 0.001
    alpha_df: float = 0.01
    beta: float = 0.001
    beta_df: float = 0.01
    beta_bg: float = 0.1
    gamma1: float = 0.0003
    gamma2: float = 0.001

    def __post_init__(self):
        for name, value in vars(self).items():
            if not value > 0:
                raise ValueError(f"hyperparameter {name} must be > 0, got {value!r}")


@dataclass(frozen=True)
class TopicConfig:
    sweeps: int = 500
    burn_in: int = 200
    thin: int = 10
    k: int = DEFAULT_K
    search_mode: str = "surface"
    context_limit: int = DEFAULT_CONTEXT_TERMS

    def __post_init__(self):
        if self.sweeps < 1 or self.thin < 1 or not 0 <= self.burn_in < self.sweeps:
            raise ValueError("need sweeps >= 1, thin >= 1 and 0 <= burn_in < sweeps")


@dataclass
class TopicModelState:
    """Sampler state for one query document.

    Topic rows are ordered: candidate entities, domain-field, NIL, background.
    Word columns cover the distinct query terms only; ``vocab_size`` is the
    size of the full vocabulary and enters the smoothing denominators.
    """

    topics: list[str]
    words: list[str]
    vocab_size: int
    tokens: np.ndarray          # word column per query token
    seed_counts: np.ndarray     # (topics, words) pseudo-counts
    seed_totals: np.ndarray     # (topics,) pseudo-count mass over the full vocabulary
    topic_word_counts: np.ndarray  # (topics, words)
    topic_totals: np.ndarray    # (topics,)
    doc_topic_counts: np.ndarray   # (topics - 1,), background excluded
    switch_counts: np.ndarray   # [background, topical]
    assignments: np.ndarray     # topic row per token; background row means switch=background
    alphas: np.ndarray = field(repr=False, default=None)
    betas: np.ndarray = field(repr=False, default=None)

    @property
    def num_candidates(self) -> int:
        return len(self.topics) - 3

    @property
    def background(self) -> int:
        return len(self.topics) - 1

    def conserved(self) -> bool:
        n = len(self.tokens)
        return (
            int(self.doc_topic_counts.sum()) + int(self.switch_counts[0]) == n
            and int(self.switch_counts.sum()) == n
            and bool((self.topic_word_counts >= 0).all())
            and bool((self.topic_word_counts.sum(axis=1) == self.topic_totals).all())
        )


def _priors(n_cand: int, hp: Hyperparameters) -> tuple[np.ndarray, np.ndarray]:
    alphas = np.array([hp.alpha] * n_cand + [hp.alpha_df, hp.alpha])
    betas = np.array([hp.beta] * n_cand + [hp.beta_df, hp.beta, hp.beta_bg])
    return alphas, betas


def build_model(
    query: Query,
    candidates: Sequence[Candidate],
    kb: KnowledgeBase,
    hp: Hyperparameters = Hyperparameters(),
    *,
    index: Optional[InvertedIndex] = None,
    rng: Optional[np.random.Generator] = None,
    doc_terms: Optional[Sequence[str]] = None,
) -> TopicModelState:
    index = index if index is not None else build_index(kb)
    rng = rng if rng is not None else np.random.default_rng(0)
    doc = list(doc_terms) if doc_terms is not None else terms(query.context_document)
    if not doc:
        raise EmptyDocumentError(f"query {query.query_id!r}: nothing to infer from an empty document")

    words = list(dict.fromkeys(doc))
    col = {w: j for j, w in enumerate(words)}
    vocab_size = len(set(index.postings) | set(words))
    ids = [c.entity_id for c in candidates]
    topics = ids + [DOMAIN_TOPIC, NIL, BACKGROUND_TOPIC]
    n_topics = len(topics)

    seed = np.zeros((n_topics, len(words)))
    seed_totals = np.zeros(n_topics)
    for r, eid in enumerate(ids):
        for w, j in col.items():
            seed[r, j] = index.tf(w, eid)
        seed_totals[r] = index.doc_len[eid]
    corpus_len = sum(index.doc_len.values())
    if corpus_len:
        avg_len = corpus_len / index.num_docs
        for w, j in col.items():
            cf = sum(tf for _, tf in index.postings.get(w, ()))
            seed[-1, j] = cf / corpus_len * avg_len
        seed_totals[-1] = avg_len

    alphas, betas = _priors(len(ids), hp)
    tokens = np.array([col[w] for w in doc], dtype=np.int64)
    assignments = rng.integers(0, n_topics, size=len(tokens))
    state = TopicModelState(
        topics=topics,
        words=words,
        vocab_size=vocab_size,
        tokens=tokens,
        seed_counts=seed,
        seed_totals=seed_totals,
        topic_word_counts=np.zeros((n_topics, len(words)), dtype=np.int64),
        topic_totals=np.zeros(n_topics, dtype=np.int64),
        doc_topic_counts=np.zeros(n_topics - 1, dtype=np.int64),
        switch_counts=np.zeros(2, dtype=np.int64),
        assignments=assignments,
        alphas=alphas,
        betas=betas,
    )
    bg = state.background
    for w, t in zip(tokens, assignments):
        state.topic_word_counts[t, w] += 1
        state.topic_totals[t] += 1
        if t == bg:
            state.switch_counts[0] += 1
        else:
            state.switch_counts[1] += 1
            state.doc_topic_counts[t] += 1
    return state


def gibbs_sweep(state: TopicModelState, hp: Hyperparameters, rng: np.random.Generator) -> TopicModelState:
    """Resample every token's (switch, topic) once, in document order."""
    bg = state.background
    tw, tt, dt, sw = state.topic_word_counts, state.topic_totals, state.doc_topic_counts, state.switch_counts
    alphas, betas = state.alphas, state.betas
    alpha_sum = alphas.sum()
    denom_base = state.seed_totals + state.vocab_size * betas
    seed = state.seed_counts
    draws = rng.random(len(state.tokens))
    for i, w in enumerate(state.tokens):
        t = state.assignments[i]
        tw[t, w] -= 1
        tt[t] -= 1
        if t == bg:
            sw[0] -= 1
        else:
            sw[1] -= 1
            dt[t] -= 1

        phi = (tw[:, w] + seed[:, w] + betas) / (tt + denom_base)
        weights = np.empty(len(phi))
        weights[:bg] = (dt + alphas) * phi[:bg] * ((sw[1] + hp.gamma2) / (sw[1] + alpha_sum))
        weights[bg] = (sw[0] + hp.gamma1) * phi[bg]
        cum = np.cumsum(weights)
        t = int(np.searchsorted(cum, draws[i] * cum[-1], side="right"))
        t = min(t, bg)

        state.assignments[i] = t
        tw[t, w] += 1
        tt[t] += 1
        if t == bg:
            sw[0] += 1
        else:
            sw[1] += 1
            dt[t] += 1
    assert state.conserved(), "topic model counts drifted"
    return state


def run_chain(
    state: TopicModelState,
    hp: Hyperparameters,
    rng: np.random.Generator,
    config: TopicConfig = TopicConfig(),
    deadline: Optional[Deadline] = None,
) -> list[np.ndarray]:
    """Run the configured schedule and return thinned post-burn-in doc-topic counts."""
    samples = []
    for sweep in range(1, config.sweeps + 1):
        gibbs_sweep(state, hp, rng)
        if deadline is not None:
            deadline.check()
        if sweep > config.burn_in and (sweep - config.burn_in) % config.thin == 0:
            samples.append(state.doc_topic_counts.copy())
    if not samples:
        samples.append(state.doc_topic_counts.copy())
    return samples


def rank_labels(
    state: TopicModelState, hp: Hyperparameters, samples: Sequence[np.ndarray]
) -> list[tuple[str, float]]:
    """Posterior-mean topic share of each candidate and of NIL."""
    if state.num_candidates == 0:
        return [(NIL, 1.0)]
    if not samples:
        raise ValueError("rank_labels needs at least one recorded sample")
    alphas = state.alphas
    stacked = np.asarray(samples, dtype=float)
    shares = (stacked + alphas) / (stacked.sum(axis=1, keepdims=True) + alphas.sum())
    mean = shares.mean(axis=0)
    nil_row = len(state.topics) - 2
    labels = list(range(state.num_candidates)) + [nil_row]
    return rank({state.topics[r]: float(mean[r]) for r in labels})


def query_seed(seed: int, query_id: str) -> np.random.Generator:
    """Per-query RNG independent of evaluation order."""
    return np.random.default_rng([seed, zlib.crc32(query_id.encode("utf-8"))])


def disambiguate_query(
    kb: KnowledgeBase,
    index: InvertedIndex,
    query: Query,
    hp: Hyperparameters = Hyperparameters(),
    config: TopicConfig = TopicConfig(),
    *,
    seed: int = 0,
    deadline: Optional[Deadline] = None,
) -> DisambiguationResult:
    if not query.name or not query.name.strip():
        raise InvalidQueryError("query name must be non-empty")
    deadline = deadline or Deadline(None)
    doc = terms(query.context_document)
    deadline.check()
    mention = Mention(query.name.strip(), None, "query_name")
    cands = generate_candidates(
        kb, index, mention, context_terms(query.context_document, config.context_limit),
        config.k, config.search_mode,
    )
    deadline.check()
    if not cands or not doc:
        return DisambiguationResult(query.query_id, [(NIL, 1.0)])
    rng = query_seed(seed, query.query_id)
    state = build_model(query, cands, kb, hp, index=index, rng=rng, doc_terms=doc)
    samples = run_chain(state, hp, rng, config, deadline)
    return DisambiguationResult(query.query_id, rank_labels(state, hp, samples))
