"""Random instance generators shared by unit and acceptance tests."""
from __future__ import annotations

import random

from entlink.graph_ned import MentionEntityGraph
from entlink.textproc import Mention


def random_graph(seed: int, max_mentions: int = 3, max_cands: int = 3,
                 pool_size: int = 6, density: float = 0.5) -> MentionEntityGraph:
    """Small mention-entity graph; mentions may share candidates drawn from one pool."""
    rng = random.Random(seed)
    n_mentions = rng.randint(1, max_mentions)
    pool = [f"e{i}" for i in range(rng.randint(1, pool_size))]
    graph = MentionEntityGraph([Mention(f"m{i}", (i, i)) for i in range(n_mentions)])
    for i in range(n_mentions):
        for e in rng.sample(pool, rng.randint(1, min(max_cands, len(pool)))):
            graph.me_edges[(i, e)] = rng.random()
            graph.entity_nodes.add(e)
    ents = sorted(graph.entity_nodes)
    for a_i, a in enumerate(ents):
        for b in ents[a_i + 1:]:
            if rng.random() < density:
                graph.ee_edges[(a, b)] = rng.uniform(0.01, 1.0)
    return graph
