import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cwpoly import formats as fmt
from cwpoly.ideal import MonomialIdeal
from cwpoly.multicomplex import VertexCoverError

from conftest import EXAMPLE_GENS, EXAMPLE_ORDER


def test_ideal_json_round_trip(example_ideal):
    obj = fmt.ideal_to_json(example_ideal)
    assert obj["n"] == 4 and obj["generators"][0] == [2, 0, 0, 0]
    assert fmt.ideal_from_json(json.loads(fmt.dumps(obj))) == example_ideal


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(*[st.integers(0, 3)] * 3).filter(any), min_size=1, max_size=6))
def test_text_round_trip(gens):
    I = MonomialIdeal.from_vectors(3, gens)
    assert fmt.ideal_from_text(fmt.ideal_to_text(I), 3) == I
    assert fmt.parse_ideal(fmt.dumps(fmt.ideal_to_json(I))) == I


def test_text_infers_variable_count():
    I = fmt.parse_ideal("# comment\nx1^2\nx1*x3\n\nx3^2\n")
    assert I.n == 3 and set(I.gens) == {(2, 0, 0), (1, 0, 1), (0, 0, 2)}
    assert fmt.parse_ideal("x1", n=4).n == 4


@pytest.mark.parametrize("text", ["", "   ", "{bad json", '{"n": 2}', "[1, 2]", "x1^q",
                                  '{"n": 2, "generators": [[1, 0, 0]]}'])
def test_parse_ideal_errors(text):
    with pytest.raises(fmt.FormatError):
        fmt.parse_ideal(text)


def test_multicomplex_formats():
    M = fmt.parse_multicomplex('{"n": 2, "facets": [[1, 0], [2, 0], [0, 1]]}')
    assert set(M.facets) == {(2, 0), (0, 1)}
    assert fmt.multicomplex_from_json(fmt.multicomplex_to_json(M)) == M
    assert fmt.parse_ideal(fmt.dumps(fmt.multicomplex_to_json(M))) == MonomialIdeal.from_vectors(2, M.facets)
    with pytest.raises(VertexCoverError):
        fmt.parse_multicomplex('{"n": 3, "facets": [[1, 1, 0]]}')


def test_parse_order_variants():
    text = fmt.order_to_text(EXAMPLE_ORDER)
    assert fmt.parse_order(text, 4) == EXAMPLE_ORDER
    assert fmt.parse_order(json.dumps([list(u) for u in EXAMPLE_ORDER]), 4) == EXAMPLE_ORDER
    assert fmt.parse_order(json.dumps({"order": [list(u) for u in EXAMPLE_ORDER]}), 4) == EXAMPLE_ORDER
    for bad in ("", '{"x": 1}', "[[1, 0]]"):
        with pytest.raises(fmt.FormatError):
            fmt.parse_order(bad, 4)
