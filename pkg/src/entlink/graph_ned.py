"""Joint disambiguation of all mentions in a document by graph coherence.

Mentions and their candidate entities form a weighted graph. Mention-entity
edges mix the link prior with context relevance; entity-entity edges carry
inlink coherence. Weak entity nodes are peeled off greedily and the snapshot
with the best minimum weighted degree decides the assignment.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .candidates import DEFAULT_CONTEXT_TERMS, DEFAULT_K, Candidate, context_terms, generate_candidates
from .deadline import Deadline
from .index import InvertedIndex
from .kb import NIL, Annotation, DisambiguationResult, KnowledgeBase, rank
from .relatedness import coherence, prior  # noqa: F401  (public re-export)
from .textproc import Mention, spot_mentions, tokenize

__all__ = [
    "GraphConfig", "MentionEntityGraph", "prior", "coherence", "build_graph", "densify",
    "assignment_objective", "disambiguate_document", "annotate_text",
]


@dataclass(frozen=True)
class GraphConfig:
    w_prior: float = 0.3
    w_context: float = 0.4
    w_coherence: float = 0.3
    min_candidates_kept: int = 1
    # search-only hits enter the graph only for mentions without alias hits
    alias_first: bool = True
    k: int = DEFAULT_K
    search_mode: str = "surface"
    context_limit: int = DEFAULT_CONTEXT_TERMS

    def __post_init__(self):
        weights = (self.w_prior, self.w_context, self.w_coherence)
        if any(w < 0 for w in weights):
            raise ValueError("mixing weights must be nonnegative")
        if abs(sum(weights) - 1.0) > 1e-9:
            raise ValueError(f"mixing weights must sum to 1, got {sum(weights)!r}")
        if self.min_candidates_kept < 1:
            raise ValueError("min_candidates_kept must be >= 1")


@dataclass
class MentionEntityGraph:
    mention_nodes: list[Mention]
    entity_nodes: set[str] = field(default_factory=set)
    # (mention index, entity id) -> weight
    me_edges: dict[tuple[int, str], float] = field(default_factory=dict)
    # (smaller id, larger id) -> coherence in (0, 1]
    ee_edges: dict[tuple[str, str], float] = field(default_factory=dict)

    def candidates_of(self, mention_idx: int) -> list[str]:
        return sorted(e for (m, e) in self.me_edges if m == mention_idx)

    def ee(self, a: str, b: str) -> float:
        return self.ee_edges.get((a, b) if a < b else (b, a), 0.0)


def build_graph(
    kb: KnowledgeBase,
    mention_candidates: Sequence[tuple[Mention, Sequence[Candidate]]],
    config: GraphConfig = GraphConfig(),
) -> MentionEntityGraph:
    graph = MentionEntityGraph([m for m, _ in mention_candidates])
    for i, (_, cands) in enumerate(mention_candidates):
        top = max((c.relevance for c in cands), default=0.0)
        for c in cands:
            ctx = c.relevance / top if top > 0 else 0.0
            graph.me_edges[(i, c.entity_id)] = config.w_prior * c.prior + config.w_context * ctx
            graph.entity_nodes.add(c.entity_id)
    owners = _mentions_of(graph)
    for a, b in combinations(sorted(graph.entity_nodes), 2):
        if not _can_cooccur(owners[a], owners[b]):
            continue
        w = coherence(kb, a, b)
        if w > 0.0:
            graph.ee_edges[(a, b)] = w
    return graph


def _mentions_of(graph: MentionEntityGraph) -> dict[str, set[int]]:
    owners: dict[str, set[int]] = {e: set() for e in graph.entity_nodes}
    for (m, e) in graph.me_edges:
        owners[e].add(m)
    return owners


def _can_cooccur(ma: set[int], mb: set[int]) -> bool:
    # Rivals for one single mention are never chosen together.
    return not (len(ma) == 1 and ma == mb)


def _live_ee_edges(graph: MentionEntityGraph):
    owners = _mentions_of(graph)
    return {
        (a, b): w for (a, b), w in graph.ee_edges.items() if _can_cooccur(owners[a], owners[b])
    }


def _weighted_degrees(graph, active, w_coh):
    """Weighted degree of each entity in the subgraph induced by ``active`` and all mentions."""
    deg = {e: 0.0 for e in active}
    for (m, e), w in graph.me_edges.items():
        if e in deg:
            deg[e] += w
    for (a, b), w in _live_ee_edges(graph).items():
        if a in deg and b in deg:
            deg[a] += w_coh * w
            deg[b] += w_coh * w
    return deg


def assignment_objective(
    graph: MentionEntityGraph, assignment: Mapping[int, str], config: GraphConfig = GraphConfig()
) -> float:
    """Minimum weighted degree of the subgraph induced by the chosen entities."""
    chosen = {e for e in assignment.values() if e != NIL}
    if not chosen:
        return 0.0
    deg = _weighted_degrees(graph, chosen, config.w_coherence)
    return min(deg.values())


def peel(graph: MentionEntityGraph, config: GraphConfig = GraphConfig()) -> frozenset[str]:
    """Greedy min-weighted-degree peeling.

    Repeatedly drops the weakest entity that is not among the last
    ``min_candidates_kept`` candidates of some mention, and returns the
    surviving entity set of the step with the largest minimum weighted degree.
    """
    active = set(graph.entity_nodes)
    cands = {i: set(graph.candidates_of(i)) for i in range(len(graph.mention_nodes))}
    mentions_of = _mentions_of(graph)
    neighbours: dict[str, dict[str, float]] = {e: {} for e in active}
    for (a, b), w in _live_ee_edges(graph).items():
        neighbours[a][b] = w
        neighbours[b][a] = w
    deg = _weighted_degrees(graph, active, config.w_coherence)

    best_value = min(deg.values()) if deg else 0.0
    best_snapshot = frozenset(active)
    keep = config.min_candidates_kept
    while True:
        removable = [
            e for e in active if all(len(cands[m]) > keep for m in mentions_of[e])
        ]
        if not removable:
            break
        victim = min(removable, key=lambda e: (deg[e], e))
        active.discard(victim)
        for m in mentions_of[victim]:
            cands[m].discard(victim)
            assert cands[m], "densify removed a mention's last candidate"
        for other, w in neighbours[victim].items():
            if other in active:
                deg[other] -= config.w_coherence * w
        del deg[victim]
        value = min(deg.values())
        if value > best_value:
            best_value = value
            best_snapshot = frozenset(active)
    return best_snapshot


def _local_search(graph, assignment, choices, config):
    """Single-mention swaps that raise (objective, total mention weight)."""

    def key(a):
        return (assignment_objective(graph, a, config),
                sum(graph.me_edges[(m, e)] for m, e in a.items() if e != NIL))

    current = key(assignment)
    improved = True
    while improved:
        improved = False
        for m, options in choices.items():
            for e in options:
                if e == assignment[m]:
                    continue
                trial = {**assignment, m: e}
                k = key(trial)
                if k > current:
                    assignment, current, improved = trial, k, True
    return assignment


def densify(graph: MentionEntityGraph, config: GraphConfig = GraphConfig()) -> dict[int, str]:
    """Mention index -> entity id (or NIL).

    After peeling, each mention starts from its heaviest surviving candidate;
    a swap-based local search over the survivors then polishes the joint
    assignment against the min-weighted-degree objective.
    """
    survivors = peel(graph, config)
    assignment: dict[int, str] = {}
    choices: dict[int, list[str]] = {}
    for i in range(len(graph.mention_nodes)):
        alive = [e for e in graph.candidates_of(i) if e in survivors]
        if not alive:
            assignment[i] = NIL
        else:
            assignment[i] = min(alive, key=lambda e: (-graph.me_edges[(i, e)], e))
            choices[i] = alive
    return _local_search(graph, assignment, choices, config)


def disambiguate_document(
    kb: KnowledgeBase,
    index: InvertedIndex,
    text: str,
    config: GraphConfig = GraphConfig(),
    *,
    query_name: Optional[str] = None,
    query_id: str = "",
    deadline: Optional[Deadline] = None,
) -> DisambiguationResult:
    deadline = deadline or Deadline(None)
    tokens = tokenize(text)
    mentions = spot_mentions(text, kb.alias_table, query_name)
    deadline.check()
    if not mentions:
        return DisambiguationResult(query_id, [(NIL, 1.0)], [])

    ctx = context_terms(text, config.context_limit)
    pairs = []
    for m in mentions:
        cands = generate_candidates(kb, index, m, ctx, config.k, config.search_mode)
        if config.alias_first:
            cands = [c for c in cands if c.name_matched] or cands
        pairs.append((m, cands))
        deadline.check()
    graph = build_graph(kb, pairs, config)
    deadline.check()
    assignment = densify(graph, config)
    deadline.check()

    annotations = []
    label_weight: dict[str, float] = {}
    for i, m in enumerate(mentions):
        eid = assignment[i]
        span = None
        if m.token_span is not None:
            span = (tokens[m.token_span[0]].char_span[0], tokens[m.token_span[1]].char_span[1])
        weight = graph.me_edges.get((i, eid), 0.0)
        annotations.append(Annotation(m, eid, span, weight))
        if eid != NIL:
            label_weight[eid] = max(label_weight.get(eid, 0.0), weight)
    ranked = rank(label_weight) if label_weight else [(NIL, 1.0)]
    return DisambiguationResult(query_id, ranked, annotations)


def annotate_text(
    text: str, result: DisambiguationResult, url_prefix: str = "http://en.wikipedia.org/wiki/"
) -> str:
    """Prefix every linked mention in ``text`` with its entity URL."""
    spans = sorted(
        (a.char_span[0], a.entity_id)
        for a in result.annotations
        if a.entity_id != NIL and a.char_span is not None
    )
    out = text
    for start, eid in reversed(spans):
        out = f"{out[:start]}{url_prefix}{eid} {out[start:]}"
    return out
