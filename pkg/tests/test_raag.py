import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import words_over
from invword.errors import UnknownVertex
from invword.raag import (
    P4,
    SimpGraph,
    apply_vertex_map,
    induced_subgraph,
    parabolic_membership,
    path_graph,
    raag_equal,
    raag_normal_form,
    vertex_map_is_homomorphism,
)
from invword.words import EPSILON, Letter, Word, alphabet, parse_word


def all_words(names, max_len):
    letters = [Letter(n, s) for n in names for s in (1, -1)]
    out = [Word(())]
    for n in range(1, max_len + 1):
        out.extend(Word(t) for t in itertools.product(letters, repeat=n))
    return out


def brute_closure_equal(g, u, v):
    """Reference BFS over adjacent commutations and cancellations."""
    idx = g.vertices.index

    def enc(w):
        return tuple((idx(l.name) + 1) * l.sign for l in w)

    names = g.vertices.names

    def comm(x, y):
        return abs(x) == abs(y) or g.adjacent(names[abs(x) - 1], names[abs(y) - 1])

    def closure(seq):
        seen = {seq}
        stack = [seq]
        while stack:
            cur = stack.pop()
            for i in range(len(cur) - 1):
                x, y = cur[i], cur[i + 1]
                if y == -x:
                    t = cur[:i] + cur[i + 2 :]
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
                if x != y and comm(x, y):
                    t = cur[:i] + (y, x) + cur[i + 2 :]
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
        return seen

    return bool(closure(enc(u)) & closure(enc(v)))


class TestSimpGraph:
    def test_p4_shape(self):
        assert P4.vertices.names == ("a", "b", "c", "d")
        assert P4.edges == (("a", "b"), ("b", "c"), ("c", "d"))

    def test_no_loops(self):
        with pytest.raises(ValueError):
            SimpGraph(alphabet("a b"), (("a", "a"),))

    def test_unknown_edge_vertex(self):
        with pytest.raises(UnknownVertex):
            SimpGraph(alphabet("a"), (("a", "q"),))

    def test_commutes_includes_same_vertex(self):
        assert P4.commutes("a", "a")
        assert P4.commutes("a", "b")
        assert not P4.commutes("a", "c")

    def test_json_roundtrip(self):
        assert SimpGraph.from_json(P4.to_json()) == P4

    def test_path_constructor(self):
        g = path_graph(3)
        assert g.edges == (("a", "b"), ("b", "c"))
        assert path_graph(4) == P4


class TestNormalForm:
    def test_commuting_pair_sorts(self, pw):
        assert str(raag_normal_form(P4, pw("b a")).word) == "a b"

    def test_non_edge_does_not_shuffle(self, pw):
        assert str(raag_normal_form(P4, pw("d a")).word) == "d a"

    def test_cancellation_through_commuting_letter(self, pw):
        assert str(raag_normal_form(P4, pw("a b A")).word) == "b"

    def test_idempotent(self, pw):
        for text in ("b a", "a b A", "d a", "c b a d D", "a b a B A"):
            nf = raag_normal_form(P4, pw(text)).word
            assert raag_normal_form(P4, nf).word == nf

    @given(words_over("abcd", max_size=10))
    @settings(max_examples=80)
    def test_idempotent_random(self, w):
        nf = raag_normal_form(P4, w).word
        assert raag_normal_form(P4, nf).word == nf

    def test_unknown_vertex(self, pw):
        with pytest.raises(UnknownVertex):
            raag_normal_form(P4, pw("q"))


class TestEquality:
    def test_edge_relation(self, pw):
        assert raag_equal(P4, pw("a b"), pw("b a"))

    def test_non_edge(self, pw):
        assert not raag_equal(P4, pw("a d"), pw("d a"))

    def test_free_cancellation(self, pw):
        assert raag_equal(P4, EPSILON, pw("a A"))

    def test_matches_brute_closure_p4(self):
        words = all_words(("a", "b", "c", "d"), 3)
        rng = random.Random(5)
        sample = rng.sample(words, 60)
        for u in sample:
            for v in rng.sample(words, 8):
                assert raag_equal(P4, u, v) == brute_closure_equal(P4, u, v)

    def test_matches_brute_closure_path3_exhaustive(self):
        g = path_graph(3)
        words = all_words(("a", "b", "c"), 3)
        nf = {w: raag_normal_form(g, w).word for w in words}
        classes = {}
        for w in words:
            classes.setdefault(nf[w], []).append(w)
        # one representative pair per class boundary plus cross-class spot checks
        reps = [ws[0] for ws in classes.values()]
        rng = random.Random(6)
        for w, rep in ((w, nf[w]) for w in rng.sample(words, 40)):
            assert brute_closure_equal(g, w, rep)
        for u, v in zip(reps, reps[1:]):
            assert not brute_closure_equal(g, u, v)


class TestParabolic:
    def test_support_in_subset(self, pw):
        assert str(parabolic_membership(P4, {"a", "b", "c"}, pw("c a"))) == "c a"

    def test_absent(self, pw):
        assert parabolic_membership(P4, {"a", "b", "c"}, pw("d")) is None

    def test_cancellation_first(self, pw):
        assert str(parabolic_membership(P4, {"a", "b", "c"}, pw("d D a"))) == "a"

    def test_full_vertex_set_always_present(self, pw):
        for text in ("a d", "b c B", "d d d"):
            assert parabolic_membership(P4, set(P4.vertices.names), pw(text)) is not None

    def test_empty_subset_iff_trivial(self, pw):
        assert parabolic_membership(P4, set(), pw("a A")) == EPSILON
        assert parabolic_membership(P4, set(), pw("a")) is None

    def test_unknown_delta_vertex(self, pw):
        with pytest.raises(UnknownVertex):
            parabolic_membership(P4, {"q"}, pw("a"))


class TestInducedSubgraph:
    def test_first_three(self):
        g = induced_subgraph(P4, {"a", "b", "c"})
        assert g.vertices.names == ("a", "b", "c")
        assert g.edges == (("a", "b"), ("b", "c"))

    def test_last_three(self):
        g = induced_subgraph(P4, {"b", "c", "d"})
        assert g.edges == (("b", "c"), ("c", "d"))

    def test_isolated_pair(self):
        assert induced_subgraph(P4, {"a", "d"}).edges == ()

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            induced_subgraph(P4, {"q"})


class TestVertexMaps:
    def test_shift_map_is_homomorphism(self):
        d1 = induced_subgraph(P4, {"a", "b", "c"})
        d2 = induced_subgraph(P4, {"b", "c", "d"})
        shift = {"a": "b", "b": "c", "c": "d"}
        assert vertex_map_is_homomorphism(d1, d2, shift)

    def test_non_edge_preserving_map_detected(self):
        d1 = induced_subgraph(P4, {"a", "b", "c"})
        bad = {"a": "a", "b": "d", "c": "c"}
        assert not vertex_map_is_homomorphism(d1, P4, bad)

    def test_homomorphism_preserves_equality(self):
        d1 = induced_subgraph(P4, {"a", "b", "c"})
        shift = {"a": "b", "b": "c", "c": "d"}
        rng = random.Random(11)
        letters = [Letter(n, s) for n in "abc" for s in (1, -1)]
        for _ in range(40):
            u = Word(tuple(rng.choice(letters) for _ in range(rng.randint(0, 6))))
            v = Word(tuple(rng.choice(letters) for _ in range(rng.randint(0, 6))))
            if raag_equal(d1, u, v):
                assert raag_equal(
                    P4, apply_vertex_map(shift, u), apply_vertex_map(shift, v)
                )
