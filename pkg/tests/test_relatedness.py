import pytest
from hypothesis import given, strategies as st

from conftest import ent, make_kb
from entlink.errors import EntityNotFound
from entlink.relatedness import coherence, prior
from entlink.textproc import Mention


@pytest.fixture(scope="module")
def paris_kb():
    # Paris has 3 inlinks, Paris_Hilton 1.
    return make_kb([
        ent("Paris", aliases=["Paris"]),
        ent("Paris_Hilton", aliases=["Paris"]),
        ent("France", links=["Paris"]),
        ent("Seine", links=["Paris"]),
        ent("Louvre", links=["Paris"]),
        ent("Hotel", links=["Paris_Hilton"]),
        ent("Lonely", aliases=["Lonely"]),
    ])


def test_prior_normalizes_inlink_counts(paris_kb):
    m = Mention("Paris", (0, 0))
    assert prior(paris_kb, m, "Paris") == 0.75
    assert prior(paris_kb, m, "Paris_Hilton") == 0.25


def test_prior_single_candidate(paris_kb):
    assert prior(paris_kb, Mention("Lonely", (0, 0)), "Lonely") == 1.0


def test_prior_uniform_when_no_inlinks():
    kb = make_kb([ent(f"E{i}", aliases=["Same"]) for i in range(4)])
    m = Mention("Same", (0, 0))
    assert [prior(kb, m, f"E{i}") for i in range(4)] == [0.25] * 4


def test_prior_outside_pool_is_zero(paris_kb):
    m = Mention("Paris", (0, 0))
    assert prior(paris_kb, m, "France", candidates=["Paris", "Paris_Hilton"]) == 0.0


def test_prior_unknown_entity(paris_kb):
    with pytest.raises(EntityNotFound):
        prior(paris_kb, Mention("Paris", (0, 0)), "Nowhere")


def _coherence_kb():
    # A has inlinks x0..x3, B has x0..x1; 100 entities in total.
    rows = [ent("A"), ent("B")]
    rows += [ent(f"x{i}", links=["A", "B"] if i < 2 else ["A"]) for i in range(4)]
    rows += [ent(f"pad{i}") for i in range(94)]
    return make_kb(rows)


def test_coherence_hand_evaluated():
    kb = _coherence_kb()
    assert kb.total_entities == 100
    # 1 - (ln 4 - ln 2) / (ln 100 - ln 2)
    assert coherence(kb, "A", "B") == pytest.approx(0.8228161798644421, abs=1e-12)


def test_coherence_identity_and_disjoint():
    kb = _coherence_kb()
    assert coherence(kb, "A", "A") == 1.0
    assert coherence(kb, "A", "pad0") == 0.0
    assert coherence(kb, "x0", "x1") == 0.0


def test_coherence_unknown_entity():
    with pytest.raises(EntityNotFound):
        coherence(_coherence_kb(), "A", "nope")


link_rows = st.lists(st.sets(st.sampled_from("ABCDEFGH"), max_size=5), min_size=8, max_size=8)


@given(link_rows, st.sampled_from("ABCDEFGH"), st.sampled_from("ABCDEFGH"))
def test_coherence_symmetric_and_bounded(links, a, b):
    kb = make_kb([ent(eid, links=sorted(ls)) for eid, ls in zip("ABCDEFGH", links)])
    ab, ba = coherence(kb, a, b), coherence(kb, b, a)
    assert ab == ba
    assert 0.0 <= ab <= 1.0


@given(link_rows)
def test_priors_sum_to_one_over_alias_pool(links):
    rows = [ent(eid, aliases=["Shared"] if eid in "ABC" else [], links=sorted(ls))
            for eid, ls in zip("ABCDEFGH", links)]
    kb = make_kb(rows)
    m = Mention("Shared", (0, 0))
    assert sum(prior(kb, m, e) for e in "ABC") == pytest.approx(1.0, abs=1e-9)
