from hypothesis import given, settings

from braidcocycles import BraidWord, classify_all, classify_triple, gauss_diagram, generate_rot
from braidcocycles.gauss import loop_homology, markings_at

from conftest import knot_words


def test_triple_types_of_a_four_strand_word():
    triples = classify_all(generate_rot(BraidWord(4, (1, -2, -3))))
    assert len(triples) == 2 * 3 * 2
    assert {t.type_key for t in triples} >= {(1, 2, "-"), (2, 1, "-"), (2, 3, "+"), (3, 2, "+")}


def test_classify_triple_matches_the_stream():
    log = generate_rot(BraidWord(3, (1, -2, 1, 2)))
    stream = classify_all(log)
    k = log.r3_indices()[3]
    single = classify_triple(log, k)
    assert single.to_json() == stream[3].to_json()


@given(knot_words(n_max=6))
def test_arrows_and_markings(w):
    g = gauss_diagram(w)
    assert len(g.arrows) == len(w.letters)
    assert [a.marking for a in g.arrows] == markings_at(w, range(len(w.letters)))
    assert all(1 <= a.marking <= w.n - 1 for a in g.arrows)
    for a in g.arrows:
        assert loop_homology(g, [a.id]) == a.marking
    assert loop_homology(g, []) == w.n


@settings(max_examples=30, deadline=None)
@given(knot_words(n_min=3, n_max=6))
def test_triple_invariants(w):
    for t in classify_all(generate_rot(w)):
        a, b = t.markings
        assert t.sign in (1, -1)
        # the third marking is carried by the lh crossing
        lh = next(x for x in t.triangle if t.role_of(x.id) == "lh")
        assert lh.marking == t.third_marking
        assert {t.role_of(x.id) for x in t.triangle} == {"lm", "mh", "lh"}
        # support: + needs a + b > n, - needs a + b < n
        assert (a + b > w.n) if t.global_type == "+" else (a + b < w.n)
        back = t.reversed_view().reversed_view()
        assert back.type_key == t.type_key and back.sign == t.sign
        assert len(t.frame()) == len(t.word.letters) - 3
