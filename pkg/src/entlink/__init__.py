"""Named-entity disambiguation with graph-coherence and entity-topic strategies."""
