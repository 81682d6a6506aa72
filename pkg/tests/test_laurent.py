import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidcocycles import LaurentPoly

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6).map(LaurentPoly)


def test_zero_terms_are_dropped():
    assert LaurentPoly({2: 0, -1: 3}).terms == {-1: 3}
    assert not LaurentPoly({0: 0})


def test_parse_and_print():
    p = LaurentPoly.parse("x^2 + x - x^-1 - x^-2")
    assert p.terms == {2: 1, 1: 1, -1: -1, -2: -1}
    assert str(p) == "x^2 + x - x^-1 - x^-2"
    assert LaurentPoly.parse("-x^3 - x + 2") == LaurentPoly({3: -1, 1: -1, 0: 2})
    assert str(LaurentPoly()) == "0"


def test_evaluation_helpers():
    p = LaurentPoly({2: 1, -1: -3})
    assert p.at_one() == -2
    assert p.derivative_at_one() == 2 + 3
    assert p.degree_range() == (-1, 2)
    assert p(2) == pytest.approx(4 - 1.5)


def test_integer_comparison():
    assert LaurentPoly({0: 3}) == 3
    assert LaurentPoly() == 0


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p - p == LaurentPoly()
    assert p * LaurentPoly.one() == p


@given(polys, polys)
def test_evaluation_is_a_ring_map(p, q):
    assert (p * q).at_one() == p.at_one() * q.at_one()
    assert (p * q).derivative_at_one() == p.derivative_at_one() * q.at_one() + p.at_one() * q.derivative_at_one()


@given(polys)
def test_json_and_text_round_trip(p):
    assert LaurentPoly.from_json(p.to_json()) == p
    assert LaurentPoly.parse(str(p)) == p
