import random

import pytest

from wordrep.certificate import Combinator, Matching, Part, RepWitness, Split, Unknown, WordRep, check_certificate
from wordrep.graph import colour_profiles, complete_graph, cycle_graph, disjoint_union, empty_graph, wheel_graph
from wordrep.io import parse_graph6
from wordrep.prover import STAGES, prove_1_11, stage_of, synthesize_word, try_single_edge, try_split
from wordrep.search import SearchBudget
from wordrep.words import is_k11_representant

from conftest import random_graph


def test_word_representable_graphs_get_word_rep():
    for g in (complete_graph(5), cycle_graph(7), empty_graph(3)):
        assert isinstance(prove_1_11(g), WordRep)


def test_w5_certified_early():
    c = prove_1_11(wheel_graph(5))
    assert STAGES.index(stage_of(c)) <= STAGES.index("star")
    assert check_certificate(wheel_graph(5), c)


class TestSingleEdge:
    def test_w5(self):
        c = try_single_edge(wheel_graph(5))
        assert isinstance(c, Matching) and len(c.added) == 1

    def test_precondition(self):
        with pytest.raises(ValueError):
            try_single_edge(complete_graph(4))

    def test_two_edges_needed(self):
        # no single added edge makes this 8-vertex graph word-representable
        g = parse_graph6("G?]}~[")
        assert try_single_edge(g) is None
        c = prove_1_11(g)
        assert stage_of(c) == "matching" and len(c.added) == 2


def test_all_small_graphs_certified(classes_upto6):
    for n in range(7):
        for g in classes_upto6[n]:
            c = prove_1_11(g)
            assert not isinstance(c, Unknown)
            assert check_certificate(g, c)


def test_random_graphs_sound():
    rng = random.Random(99)
    for _ in range(40):
        g = random_graph(7, rng.choice([0.5, 0.7, 0.85]), rng)
        c = prove_1_11(g)
        assert isinstance(c, Unknown) or check_certificate(g, c)


def test_big_class_plus_singletons_reach_split(classes_upto6):
    # a (k,1,...,1) profile always yields a split certificate, and the prover
    # never needs a stage past it
    split_at = STAGES.index("split")
    checked = 0
    for n in range(2, 7):
        for g in classes_upto6[n]:
            if not any(p[1:] == (1,) * (len(p) - 1) for p in colour_profiles(g)):
                continue
            checked += 1
            s = try_split(g)
            assert isinstance(s, Split) and check_certificate(g, s)
            assert STAGES.index(stage_of(prove_1_11(g))) <= split_at
    assert checked > 50


def test_budget_gives_unknown_with_trace():
    g = parse_graph6("KNNvR{tzaU~b")
    c = prove_1_11(g, SearchBudget(node_limit=1))
    assert isinstance(c, Unknown)
    assert c.trace[0] == "word_rep:budget"
    assert [t.split(":")[0] for t in c.trace] == list(STAGES)


class TestSynthesis:
    def test_doubling(self):
        k3 = complete_graph(3)
        assert synthesize_word(k3, WordRep(RepWitness(word=(0, 1, 2)))) == (0, 1, 2, 0, 1, 2)

    def test_disjoint_union(self):
        g = disjoint_union(complete_graph(2), complete_graph(1))
        c = Combinator(
            "disjoint_union",
            (Part((0, 1), WordRep(RepWitness(word=(0, 1)))), Part((2,), WordRep(RepWitness(word=(0,))))),
        )
        assert check_certificate(g, c)
        w = synthesize_word(g, c)
        assert w is not None and is_k11_representant(w, 1, g)

    def test_unsupported_rule(self):
        w5 = wheel_graph(5)
        assert synthesize_word(w5, prove_1_11(w5)) is None

    def test_orientation_witness_small_graph(self):
        # WordRep by orientation: a word is searched for, then doubled
        g = cycle_graph(5)
        w = synthesize_word(g, prove_1_11(g))
        assert w is not None and is_k11_representant(w, 1, g)

    def test_synthesized_words_verify(self, classes_upto6):
        for n in range(1, 6):
            for g in classes_upto6[n]:
                w = synthesize_word(g, prove_1_11(g))
                assert w is not None and is_k11_representant(w, 1, g)
