"""Link-based mention priors and entity-entity coherence."""
from __future__ import annotations

import math
from typing import Iterable, Optional

from .kb import KnowledgeBase, alias_lookup, get_entity
from .textproc import Mention


def prior(
    kb: KnowledgeBase,
    mention: Mention,
    entity_id: str,
    candidates: Optional[Iterable[str]] = None,
) -> float:
    """Link-popularity prior of ``entity_id`` for ``mention``.

    The competing pool is ``candidates`` when given, else every entity sharing
    the mention surface. Entities outside the pool get 0. Inlink counts are
    normalized over the pool; an all-zero pool falls back to uniform.
    """
    get_entity(kb, entity_id)
    pool = set(candidates) if candidates is not None else set(alias_lookup(kb, mention.surface))
    if candidates is None:
        pool.add(entity_id)
    if entity_id not in pool:
        return 0.0
    counts = {e: len(get_entity(kb, e).inlinks) for e in pool}
    total = sum(counts.values())
    if total == 0:
        return 1.0 / len(pool)
    return counts[entity_id] / total


def coherence(kb: KnowledgeBase, e1: str, e2: str) -> float:
    """Normalized inlink overlap in [0, 1]; 1 for identical entities."""
    a = get_entity(kb, e1).inlinks
    b = get_entity(kb, e2).inlinks
    if e1 == e2:
        return 1.0
    common = len(a & b)
    if common == 0:
        return 0.0
    big, small = max(len(a), len(b)), min(len(a), len(b))
    denom = math.log(kb.total_entities) - math.log(small)
    if denom <= 0.0:
        return 1.0
    value = 1.0 - (math.log(big) - math.log(common)) / denom
    return min(1.0, max(0.0, value))
