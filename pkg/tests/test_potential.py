from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given, strategies as st

from cominuscule_lg.errors import InvalidParameters, SizeMismatch, ZeroCoordinate
from cominuscule_lg.potential import (POTENTIAL_SCHEMA, assemble, check_word, compute_potential,
                                      evaluate, parse_json, render)
from cominuscule_lg.rootdata import CominusculeSpace, catalog_spaces

from reference_values import GR46

CATALOG = catalog_spaces()


def naive(subsets, point, q):
    total = Fraction(0)
    for x in point:
        total += x
    den = Fraction(1)
    for x in point:
        den *= x
    for s in subsets:
        m = Fraction(1)
        for i in s:
            m *= point[i - 1]
        total += q * m / den
    return total


def test_q2_value():
    p = assemble(2, [(1,), (2,)])
    assert evaluate(p, [1, 1], 1) == 4


@pytest.mark.parametrize("s", CATALOG, ids=lambda s: s.name)
def test_all_ones(s):
    p = compute_potential(s)
    assert evaluate(p, [1] * p.ell, 1) == p.ell + len(p.numerator)


def test_gr46_against_naive():
    p = compute_potential(CominusculeSpace.grassmannian(4, 6))
    pt = [Fraction(i) for i in range(1, 9)]
    assert evaluate(p, pt, 1) == naive(GR46, pt, 1)


def test_render_text():
    assert render(compute_potential(CominusculeSpace.quadric(3))) == \
        "a1 + a2 + a3 + q*(a1 + a3)/(a1*a2*a3)"
    assert render(compute_potential(CominusculeSpace.grassmannian(1, 3))) == "a1 + a2 + q/(a1*a2)"


def test_render_latex():
    tex = render(compute_potential(CominusculeSpace.orthogonal_grassmannian(5)), "latex")
    assert "a_1a_2a_3 + a_1a_2a_{10} + a_1a_5a_{10} + a_1a_9a_{10} + a_6a_9a_{10}" in tex


@pytest.mark.parametrize("s", CATALOG, ids=lambda s: s.name)
def test_json_round_trip_and_schema(s):
    p = compute_potential(s)
    text = render(p, "json")
    jsonschema.validate(p.to_dict(), POTENTIAL_SCHEMA)
    assert parse_json(text) == p
    assert render(parse_json(text), "json") == text


@pytest.mark.parametrize("s", CATALOG, ids=lambda s: s.name)
def test_homogeneous(s):
    p = compute_potential(s)
    assert len({len(m) for m in p.numerator}) == 1
    assert p.ell == s.dimension


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        assemble(3, [(1,), (1, 2)])


def test_zero_coordinate():
    p = assemble(2, [(1,)])
    with pytest.raises(ZeroCoordinate):
        evaluate(p, [0, 1], 1)


def test_word_override():
    s = CominusculeSpace.grassmannian(2, 4)
    assert compute_potential(s, word=(2, 1, 3, 2)).numerator == ((1,), (4,))
    with pytest.raises(InvalidParameters):
        check_word(s, (2, 2, 1, 3))
    with pytest.raises(InvalidParameters):
        check_word(s, (1, 2, 3))


def test_methods_agree():
    s = CominusculeSpace.cayley_plane()
    assert compute_potential(s, method="moves") == compute_potential(s, method="bruteforce")


@given(st.lists(st.fractions(min_value=-50, max_value=50).filter(bool), min_size=3, max_size=3),
       st.fractions(min_value=-9, max_value=9).filter(bool))
def test_evaluate_matches_naive(pt, q):
    p = compute_potential(CominusculeSpace.quadric(3))
    assert evaluate(p, pt, q) == naive([(1,), (3,)], pt, q)
