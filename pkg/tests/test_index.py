import math

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ent, make_kb
from entlink.errors import EntityNotFound, IndexFormatError
from entlink.index import (
    build_index,
    check_index,
    load_index,
    save_index,
    score_all,
    search,
    tfidf_score,
)
from entlink.textproc import terms
from oracles import brute_force_search


def test_build_counts_single_doc():
    idx = build_index(make_kb([ent("A", "born born Ulm")]))
    assert idx.tf("born", "A") == 2
    assert idx.tf("ulm", "A") == 1
    assert idx.num_docs == 1
    assert idx.doc_len == {"A": 3}


def test_empty_text_entity_has_no_postings():
    idx = build_index(make_kb([ent("A", ""), ent("B", "Ulm")]))
    assert idx.doc_len["A"] == 0
    assert all(eid != "A" for plist in idx.postings.values() for eid, _ in plist)


def test_doc_freq_matches_recount(einstein_kb):
    idx = build_index(einstein_kb)
    docs = {e: set(terms(r.document)) for e, r in einstein_kb.entities.items()}
    for term, df in idx.doc_freq.items():
        assert df == sum(term in d for d in docs.values())
        assert df == len(idx.postings[term])
    for term in set().union(*docs.values()):
        total = sum(terms(r.document).count(term) for r in einstein_kb.entities.values())
        assert sum(tf for _, tf in idx.postings[term]) == total


def test_score_hand_evaluated():
    idx = build_index(make_kb([ent("A", "born born Ulm"), ent("B", "Paris")]))
    # idf(born) = 1 + ln(2 / 2) = 1; sqrt(2) * 1 / sqrt(3)
    assert tfidf_score(idx, ["born"], "A") == pytest.approx(0.816496580927726, abs=1e-15)
    # half the query terms match
    assert tfidf_score(idx, ["born", "paris"], "A") == pytest.approx(0.408248290463863, abs=1e-15)
    assert tfidf_score(idx, ["born", "born"], "A") == tfidf_score(idx, ["born"], "A")
    assert tfidf_score(idx, ["danube"], "A") == 0.0
    assert tfidf_score(idx, [], "A") == 0.0


def test_score_unknown_entity():
    idx = build_index(make_kb([ent("A", "x")]))
    with pytest.raises(EntityNotFound):
        tfidf_score(idx, ["x"], "B")


@pytest.fixture
def queen_index():
    return build_index(make_kb([
        ent("Elizabeth_II", "Queen Elizabeth. Queen Elizabeth reigned. Queen Elizabeth II."),
        ent("United_Kingdom", "The United Kingdom is a country whose head of state was Queen "
            "Elizabeth for decades, with a parliament, a capital London and many counties."),
        ent("Elizabeth_I", "Elizabeth was a Tudor queen of England who never married and whose "
            "reign saw the defeat of the Armada and a flowering of theatre."),
        ent("London", "London is the capital city of England and the United Kingdom."),
    ]))


def test_short_dense_doc_wins(queen_index):
    hits = search(queen_index, ["queen", "elizabeth"], 4)
    assert hits[0][0] == "Elizabeth_II"
    assert [e for e, _ in search(queen_index, ["queen", "elizabeth"], 1)] == ["Elizabeth_II"]


def test_search_k_larger_than_corpus(queen_index):
    hits = search(queen_index, ["capital"], 100)
    assert sorted(e for e, _ in hits) == ["London", "United_Kingdom"]


def test_search_prefix_consistency(queen_index):
    q = ["queen", "elizabeth", "capital", "england"]
    full = search(queen_index, q, 4)
    for k in range(1, 4):
        assert search(queen_index, q, k) == full[:k]


def test_search_rejects_bad_k(queen_index):
    with pytest.raises(ValueError):
        search(queen_index, ["queen"], 0)


def test_save_load_round_trip(tmp_path, minitac_kb, minitac_index):
    path = tmp_path / "kb.idx"
    save_index(minitac_index, path)
    again = load_index(path)
    assert again.postings == minitac_index.postings
    assert again.doc_freq == minitac_index.doc_freq
    assert again.doc_len == minitac_index.doc_len
    check_index(again, minitac_kb)
    q = terms("Page played Kashmir at Knebworth")
    assert search(again, q, 10) == search(minitac_index, q, 10)


@pytest.mark.parametrize("content", [
    "",
    "NOT-AN-INDEX 1\n{}\n",
    "ENTLINK-INDEX 99\n{}\n",
    "ENTLINK-INDEX 1\n{broken\n",
    'ENTLINK-INDEX 1\n{"postings": {}}\n',
    'ENTLINK-INDEX 1\n{"postings": {"a": [[1]]}, "doc_len": {}, "num_docs": 0}\n',
])
def test_load_rejects_bad_files(tmp_path, content):
    path = tmp_path / "bad.idx"
    path.write_text(content)
    with pytest.raises(IndexFormatError):
        load_index(path)


def test_check_index_detects_other_kb(einstein_kb, minitac_index):
    with pytest.raises(IndexFormatError):
        check_index(minitac_index, einstein_kb)


VOCAB = [f"w{i}" for i in range(30)]
corpora = st.dictionaries(
    st.sampled_from([f"d{i}" for i in range(10)]),
    st.lists(st.sampled_from(VOCAB), min_size=1, max_size=25),
    min_size=1, max_size=10,
)


def _index_of(docs):
    return build_index(make_kb([ent(d, " ".join(toks)) for d, toks in docs.items()]))


@settings(max_examples=80)
@given(corpora, st.lists(st.sampled_from(VOCAB), min_size=1, max_size=6), st.integers(1, 12))
def test_search_equals_brute_force(docs, query, k):
    assert search(_index_of(docs), query, k) == brute_force_search(docs, query, k)


@settings(max_examples=60)
@given(corpora, st.lists(st.sampled_from(VOCAB), min_size=1, max_size=6))
def test_unrelated_doc_only_moves_scores_through_idf(docs, query):
    extra = dict(docs)
    extra["zz_unrelated"] = ["nothingshared"]
    got = score_all(_index_of(extra), query)
    expected = dict(brute_force_search(extra, query, len(extra)))
    assert got.keys() == expected.keys()
    for eid, s in got.items():
        assert s == expected[eid]
    assert "zz_unrelated" not in got


def test_scores_nonnegative_and_deterministic(minitac_kb, minitac_index):
    q = terms("Queen Elizabeth visited the Beatles in Liverpool")
    a = search(minitac_index, q, 20)
    b = search(build_index(minitac_kb), q, 20)
    assert a == b
    assert all(s >= 0 and math.isfinite(s) for _, s in a)
