import pytest

from entlink.candidates import context_terms, generate_candidates
from entlink.index import build_index
from entlink.textproc import Mention, terms

PAGE = "When Page played Kashmir at Knebworth, his Les Paul was uniquely tuned."


def ids(cands):
    return [c.entity_id for c in cands]


def test_einstein_alias_hit(einstein_kb):
    idx = build_index(einstein_kb)
    cands = generate_candidates(einstein_kb, idx, Mention("Einstein", (0, 0)),
                                terms("Einstein was born in Ulm."))
    first = cands[0]
    assert first.entity_id == "Albert_Einstein"
    assert first.name_matched and first.prior == 1.0
    assert all(c.relevance >= 0 and 0 <= c.prior <= 1 for c in cands)
    assert len(set(ids(cands))) == len(cands)


def test_no_hits_gives_empty_list(einstein_kb):
    idx = build_index(einstein_kb)
    assert generate_candidates(einstein_kb, idx, Mention("Zzyzx", (0, 0)), []) == []
    assert generate_candidates(einstein_kb, idx, Mention("Zzyzx", (0, 0)), ["qqq"]) == []


def test_kashmir_song_and_region_both_present(minitac_kb, minitac_index):
    m = Mention("Kashmir", (2, 2))
    bare = generate_candidates(minitac_kb, minitac_index, m, [])
    assert {"Kashmir", "Kashmir_(song)"} <= set(ids(bare))
    rich = generate_candidates(minitac_kb, minitac_index, m, context_terms(PAGE))
    assert {"Kashmir", "Kashmir_(song)"} <= set(ids(rich))
    rel = {c.entity_id: c.relevance for c in rich}
    assert rel["Kashmir_(song)"] > rel["Kashmir"]


def test_priors_sum_to_one_over_pool(minitac_kb, minitac_index):
    for surface in ("Kashmir", "Page", "Les Paul", "Paris"):
        cands = generate_candidates(minitac_kb, minitac_index, Mention(surface, (0, 0)),
                                    context_terms(PAGE))
        named = [c for c in cands if c.name_matched]
        pool = named or cands
        assert sum(c.prior for c in pool) == pytest.approx(1.0, abs=1e-9)
        if named:
            assert all(c.prior == 0.0 for c in cands if not c.name_matched)


@pytest.mark.parametrize("mode", ["surface", "context", "surface+context"])
def test_search_modes_deterministic(minitac_kb, minitac_index, mode):
    m = Mention("Page", (1, 1))
    ctx = context_terms(PAGE)
    a = generate_candidates(minitac_kb, minitac_index, m, ctx, 5, mode)
    b = generate_candidates(minitac_kb, minitac_index, m, ctx, 5, mode)
    assert a == b
    assert sum(not c.name_matched for c in a) <= 5


def test_context_mode_reaches_entities_without_alias(minitac_kb, minitac_index):
    m = Mention("Page", (1, 1))
    cands = generate_candidates(minitac_kb, minitac_index, m, context_terms(PAGE), 20, "context")
    assert "Knebworth_Festival_1979" in ids(cands)


def test_bad_arguments(minitac_kb, minitac_index):
    m = Mention("Page", (1, 1))
    with pytest.raises(ValueError):
        generate_candidates(minitac_kb, minitac_index, m, [], k=0)
    with pytest.raises(ValueError):
        generate_candidates(minitac_kb, minitac_index, m, [], search_mode="web")


def test_context_terms_limit():
    assert context_terms("the of and alpha beta gamma delta", 2) == ["alpha", "beta"]
