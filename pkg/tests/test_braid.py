import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidcocycles import BraidWord, cable, closure_permutation, conjugate, is_knot, parse_braid, reverse
from braidcocycles.braid import delta_word, flip, lex_min_commutation

from conftest import knot_words


def test_parse_and_validation():
    assert parse_braid("1 -2 3", 4).letters == (1, -2, 3)
    with pytest.raises(ValueError):
        parse_braid("1 x", 3)
    with pytest.raises(ValueError):
        BraidWord(3, (3,))
    with pytest.raises(ValueError):
        BraidWord(1, ())


def test_closure_permutation_of_small_words():
    assert is_knot(BraidWord(3, (1, 2)))
    assert not is_knot(BraidWord(3, (1, -1, 2, -2)))
    assert closure_permutation(BraidWord(2, (1,))).cycle_type() == (2,)


def test_delta_word():
    assert delta_word(3).letters == (1, 2, 1)
    assert len(delta_word(5).letters) == 10


def test_lex_min_commutation_only_swaps_distant_letters():
    assert lex_min_commutation([3, 1]) == (1, 3)
    assert lex_min_commutation([2, 1]) == (2, 1)


def test_cable_of_a_knot_is_a_knot():
    w = BraidWord(5, (1, 2, 3, 4))
    c = cable(w, 2, add_twist=True)
    assert c.n == 10 and is_knot(c)
    assert len(c.letters) == 4 * 4 + 1


@given(knot_words())
def test_closure_is_a_conjugacy_invariant(w):
    u = BraidWord(w.n, (1, -1 if w.n == 2 else 2))
    assert is_knot(conjugate(w, u))
    assert is_knot(w.rotate(1))
    assert is_knot(reverse(w)) and is_knot(flip(w)) and is_knot(w.inverse())


@given(knot_words())
def test_rotation_and_json(w):
    assert w.rotate(len(w.letters)) == w
    assert BraidWord.from_json(w.to_json()) == w


@given(knot_words(n_max=4, max_len=6), st.integers(2, 3))
def test_cables_keep_the_knot_type_count(w, k):
    c = cable(w, k, add_twist=True)
    assert c.n == k * w.n
    assert is_knot(c)
