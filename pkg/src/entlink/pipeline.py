"""Strategy dispatch shared by the CLI and the HTTP service."""
from __future__ import annotations

from typing import Optional

from .deadline import Deadline
from .graph_ned import GraphConfig, disambiguate_document
from .index import InvertedIndex
from .kb import NIL, DisambiguationResult, KnowledgeBase, Query, QueryType
from .textproc import spot_mentions
from .topic_ned import Hyperparameters, TopicConfig, disambiguate_query


def disambiguate_text(
    kb: KnowledgeBase,
    index: InvertedIndex,
    text: str,
    strategy: str = "graph",
    *,
    name: Optional[str] = None,
    query_type: str = "unknown",
    query_id: str = "",
    seed: int = 0,
    deadline: Optional[Deadline] = None,
    graph_config: GraphConfig = GraphConfig(),
    topic_config: TopicConfig = TopicConfig(),
    hp: Hyperparameters = Hyperparameters(),
) -> DisambiguationResult:
    """Disambiguate free text.

    With the topic strategy and no ``name``, the first spotted mention serves
    as the query name; text without any mention yields NIL.
    """
    if strategy == "graph":
        return disambiguate_document(
            kb, index, text, graph_config, query_name=name, query_id=query_id, deadline=deadline
        )
    if strategy != "topic":
        raise ValueError(f"unknown strategy {strategy!r}")
    if name is None or not name.strip():
        spotted = spot_mentions(text, kb.alias_table)
        if not spotted:
            return DisambiguationResult(query_id, [(NIL, 1.0)])
        name = spotted[0].surface
    query = Query(query_id, QueryType.parse(query_type), name, text)
    return disambiguate_query(kb, index, query, hp, topic_config, seed=seed, deadline=deadline)
