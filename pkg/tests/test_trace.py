import json
from dataclasses import replace

from hypothesis import given, settings

from braidcocycles import (
    BraidWord,
    LaurentPoly,
    all_characters0,
    build_trace,
    characters_d,
    classify_all,
    compare_invariants,
    conjugate,
    detect_generalized_trihedrons,
    evaluate,
    generate_rot,
    monodromy,
    parse_family,
    trace_circles,
)
from braidcocycles.loop import R3, apply_event
from braidcocycles.trace import find_bijection, to_dot, trace_summary

from conftest import knot_words


def _graph(w, l=1):
    g = build_trace(generate_rot(w, l))
    return g, trace_circles(g)


def test_circle_names_and_classes():
    g, circles = _graph(BraidWord(3, (2, -1, 2, -1)), 2)
    assert [c.name for c in circles] == ["x1_1", "x1_2", "x2_1", "x2_2"]
    assert all(c.marking == int(c.name[1]) for c in circles)
    members = [m for c in circles for m in c.members]
    assert len(members) == len(set(members)) == len(g.arcs)


def test_monodromy_is_trivial_for_one_rotation():
    m = monodromy(BraidWord(3, (2, -1, 2, -1)), 1)
    assert m.is_trivial()
    assert json.loads(json.dumps(m.to_json()))["l"] == 1


def test_dot_and_summary_export():
    g, circles = _graph(BraidWord(3, (2, -1)))
    dot = to_dot(g, circles)
    assert dot.startswith("digraph trace {") and dot.rstrip().endswith("}")
    assert dot.count("shape=triangle") == 4
    summary = trace_summary(g, circles)
    json.dumps(summary)
    assert summary["triple_nodes"] == 4 and summary["markings"] == [1, 2]


@settings(max_examples=40, deadline=None)
@given(knot_words(n_max=6, max_len=12))
def test_one_circle_per_marking(w):
    _, circles = _graph(w)
    assert len(circles) == w.n - 1
    assert sorted(c.marking for c in circles) == list(range(1, w.n))


@settings(max_examples=25, deadline=None)
@given(knot_words(n_max=5, max_len=9))
def test_characters_are_conjugacy_invariant(w):
    u = BraidWord(w.n, (1,) if w.n == 2 else (2, -1))
    for l in (1, 2):
        ga, ca = _graph(w, l)
        gb, cb = _graph(conjugate(w, u), l)
        assert compare_invariants(all_characters0(ga, ca), all_characters0(gb, cb), ca, cb)


@settings(max_examples=20, deadline=None)
@given(knot_words(n_min=3, n_max=3, max_len=10))
def test_characters_split_the_polynomial_at_one_rotation(w):
    g, circles = _graph(w)
    triples = classify_all(g.log)
    for fam in ("degd-l:1", "degd-l:2", "degd-h:2", "degd-l:3:mirror"):
        table = characters_d(g, circles, fam)
        assert sum(table.entries.values(), LaurentPoly()) == evaluate(triples, parse_family(fam, 3))


def test_find_bijection_on_itself_is_identity_compatible():
    g, circles = _graph(BraidWord(3, (-1, 2, -1, -1, -1, 2, 2, 2)), 3)
    table = all_characters0(g, circles)
    sigma = find_bijection([table], [table], circles, circles)
    assert sigma is not None and sorted(sigma) == sorted(sigma.values())


def _insert_cancelling_r3(log):
    """Insert an R3 move and its inverse before the first R3 of ``log``."""
    k = log.r3_indices()[0]
    state = log.initial
    for ev in log.events[:k]:
        state = apply_event(state, ev)
    ev = log.events[k]
    there = R3(ev.position, ev.ids, ev.before, ev.after)
    back = R3(ev.position, ev.ids[::-1], ev.after, ev.before)
    return replace(log, events=log.events[:k] + (there, back) + log.events[k:]), k


def test_inserted_r3_pair_bounds_a_trihedron():
    w = BraidWord(3, (1, -2, 1, 2))
    log = generate_rot(w)
    bigger, k = _insert_cancelling_r3(log)
    g = build_trace(bigger)
    circles = trace_circles(g)
    t0, t1 = g.triples[k], g.triples[k + 1]
    assert t0.type_key == t1.type_key and t0.sign == -t1.sign
    e = detect_generalized_trihedrons(g, circles)
    assert (k, k + 1) in e.pairing
    base = detect_generalized_trihedrons(build_trace(log))
    assert len(e.members) == len(base.members)
    # every cocycle is unchanged
    a, b = classify_all(log), classify_all(bigger)
    for fam in ("deg0:(2,2)+", "deg0:(1,1)-", "degd-l:1", "degd-l:2", "degd-h:2"):
        f = parse_family(fam, 3)
        assert evaluate(a, f) == evaluate(b, f)
    ga = build_trace(log)
    ca = trace_circles(ga)
    assert compare_invariants(all_characters0(ga, ca), all_characters0(g, circles), ca, circles)
