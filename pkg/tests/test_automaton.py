import pytest
from hypothesis import given, strategies as st

from kostant.automaton import LetterError, build_dfa, dfa_from_json
from kostant.diagram import catalog_diagram, iter_catalog
from kostant.game import GraphTooLargeError
from kostant.roots import positive_roots, roots_outside
from kostant.weyl import WeylGroup


@pytest.fixture(scope="module")
def a2_j1():
    # inactive {1}, so the automaton recognizes plays for W / W_{s1}
    return build_dfa(catalog_diagram("A", 2), {2})


class TestConstruction:
    def test_a2_j1_state_count(self, a2_j1):
        assert len(a2_j1.labels) == 4  # three configurations and the trap
        assert a2_j1.labels == ("0,0", "0,1", "1,1", "trap")

    def test_a2_j1_transition_table(self, a2_j1):
        q = {label: i for i, label in enumerate(a2_j1.labels)}
        trap = a2_j1.trap
        assert a2_j1.delta[q["0,0"]] == (trap, q["0,1"])
        assert a2_j1.delta[q["0,1"]] == (q["1,1"], trap)
        assert a2_j1.delta[q["1,1"]] == (trap, trap)
        assert a2_j1.delta[trap] == (trap, trap)

    def test_a1_single_source(self):
        dfa = build_dfa(catalog_diagram("A", 1), {1})
        assert len(dfa.labels) == 3  # two configurations plus trap

    def test_a2_full_active_set(self):
        dfa = build_dfa(catalog_diagram("A", 2), {1, 2})
        assert len(dfa.labels) == 7

    def test_node_cap_propagates(self):
        with pytest.raises(GraphTooLargeError):
            build_dfa(catalog_diagram("A", 4), {2}, node_cap=3)


class TestAcceptance:
    def test_accepts_exactly_the_three_words(self, a2_j1):
        assert a2_j1.accepts(())
        assert a2_j1.accepts((2,))
        assert a2_j1.accepts((2, 1))
        assert not a2_j1.accepts((1,))
        assert not a2_j1.accepts((2, 2))
        assert not a2_j1.accepts((2, 1, 1))
        assert not a2_j1.accepts((2, 1, 2))

    def test_run_returns_the_state_trace(self, a2_j1):
        assert a2_j1.run((2, 1)) == (0, 1, 2)
        assert a2_j1.run((1, 2)) == (0, 3, 3)

    def test_letters_out_of_range_rejected(self, a2_j1):
        with pytest.raises(LetterError):
            a2_j1.accepts((3,))
        with pytest.raises(LetterError):
            a2_j1.accepts((0,))


class TestLanguage:
    def test_a2_j1_words_by_length(self, a2_j1):
        language = a2_j1.enumerate_language(3)
        assert language == {0: ((),), 1: ((2,),), 2: ((2, 1),)}

    def test_max_len_zero(self, a2_j1):
        assert a2_j1.enumerate_language(0) == {0: ((),)}

    def test_a2_full_language_has_seven_words(self):
        dfa = build_dfa(catalog_diagram("A", 2), {1, 2})
        language = dfa.enumerate_language(3)
        assert {k: len(v) for k, v in language.items()} == {0: 1, 1: 2, 2: 2, 3: 2}
        assert dfa.word_count(3) == 7
        assert dfa.word_count(10) == 7  # nothing longer exists

    def test_prefix_closure(self):
        dfa = build_dfa(catalog_diagram("B", 2), {1, 2})
        for words in dfa.enumerate_language(4).values():
            for word in words:
                assert dfa.accepts(word[:-1])

    def test_total_count_matches_the_oracle(self):
        for d in iter_catalog(3):
            W = WeylGroup(d)
            n = d.n
            for mask in range(1, 2**n):
                active = {v for v in range(1, n + 1) if mask & (1 << (v - 1))}
                J = frozenset(range(1, n + 1)) - active
                system = W.minimal_coset_reps(J)
                expected = sum(W.reduced_word_count(w) for w in system.reps)
                dfa = build_dfa(d, active)
                assert dfa.word_count(system.longest.length) == expected

    def test_longest_word_length_is_the_outside_root_count(self):
        for d in iter_catalog(3):
            pos = positive_roots(d)
            n = d.n
            for mask in range(1, 2**n):
                active = {v for v in range(1, n + 1) if mask & (1 << (v - 1))}
                inactive = set(range(1, n + 1)) - active
                bound = len(roots_outside(pos, inactive))
                language = build_dfa(d, active).enumerate_language(bound + 1)
                assert max(language) == bound
                assert language[bound]

    def test_empty_inactive_set_recovers_all_reduced_words(self):
        for d in iter_catalog(3):
            W = WeylGroup(d)
            expected = set()
            for w in W:
                expected |= {tuple(reversed(u)) for u in W.reduced_words(w)}
            dfa = build_dfa(d, set(range(1, d.n + 1)))
            accepted = {
                word
                for ws in dfa.enumerate_language(W.longest_element().length).values()
                for word in ws
            }
            assert accepted == expected


class TestMinimize:
    def test_a2_j1_already_minimal(self, a2_j1):
        assert len(a2_j1.minimize().labels) <= 4

    def test_idempotent(self, a2_j1):
        once = a2_j1.minimize()
        assert len(once.minimize().labels) == len(once.labels)

    def test_language_preserved_on_a3(self):
        dfa = build_dfa(catalog_diagram("A", 3), {2})
        small = dfa.minimize()
        assert small.enumerate_language(6) == dfa.enumerate_language(6)
        assert len(small.labels) <= len(dfa.labels)

    def test_agreement_up_to_twice_the_state_count(self, a2_j1):
        small = a2_j1.minimize()
        bound = 2 * len(a2_j1.labels)
        lang_a = a2_j1.enumerate_language(bound)
        lang_b = small.enumerate_language(bound)
        assert lang_a == lang_b

    def test_merged_states_keep_their_labels(self):
        dfa = build_dfa(catalog_diagram("A", 3), {1})
        small = dfa.minimize()
        assert any("|" in label or label for label in small.labels)
        assert small.labels[small.trap].count("trap") == 1


class TestExport:
    def test_dot_declares_every_state(self, a2_j1):
        dot = a2_j1.to_dot()
        assert dot.count("shape=doublecircle") == 3
        assert dot.count("shape=ellipse") == 1
        assert "style=dashed" in dot

    def test_json_roundtrip(self, a2_j1):
        again = dfa_from_json(a2_j1.to_json())
        assert again.delta == a2_j1.delta
        assert again.start == a2_j1.start
        assert again.trap == a2_j1.trap
        assert again.accepting == a2_j1.accepting

    def test_json_fields(self, a2_j1):
        data = a2_j1.to_json_dict()
        assert set(data) == {"states", "trap", "start", "delta", "accepting"}
        assert data["accepting"] == [0, 1, 2]


@given(st.sampled_from([("A", 2), ("B", 2), ("A", 3)]), st.data())
def test_random_words_run_deterministically(case, data):
    diagram = catalog_diagram(*case)
    n = diagram.n
    dfa = build_dfa(diagram, set(range(1, n + 1)))
    word = tuple(
        data.draw(st.integers(min_value=1, max_value=n), label="letter")
        for _ in range(data.draw(st.integers(min_value=0, max_value=8), label="len"))
    )
    trace = dfa.run(word)
    assert len(trace) == len(word) + 1
    assert dfa.accepts(word) == (trace[-1] != dfa.trap)
    # prefix closure in the negative direction: once trapped, stays trapped
    if not dfa.accepts(word):
        assert not dfa.accepts(word + (1,))
