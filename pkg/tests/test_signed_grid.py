import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sp9grid.signed_grid import (
    GridError, GridVertex, all_signatures, edge_sign, make_grid, parse_grid, random_signature, serialize_grid,
)
from sp9grid.signed_paley import MINUS, PLUS


def test_degenerate_grid():
    g = make_grid(1, 1, [])
    assert g.num_edges == 0 and list(g.edges()) == []


def test_small_grid_counts():
    g = make_grid(2, 2, [((0, 0), (0, 1))])
    assert g.num_edges == len(list(g.edges())) == 4
    assert len(g.negative_edges) == 1
    assert edge_sign(g, (0, 0), (0, 1)) is MINUS
    assert edge_sign(g, (0, 1), (0, 0)) is MINUS
    assert edge_sign(g, (0, 0), (1, 0)) is PLUS
    with pytest.raises(GridError):
        edge_sign(g, (0, 0), (1, 1))


def test_all_negative_grid():
    base = make_grid(3, 3)
    g = make_grid(3, 3, list(base.edges()))
    assert len(g.negative_edges) == 12
    assert all(g.sign(u, v) is MINUS for u, v in g.edges())


@pytest.mark.parametrize("edge", [((0, 0), (2, 0)), ((0, 0), (1, 1)), ((0, 0), (0, 0)), ((0, 0), (-1, 0)), ((2, 0), (3, 0))])
def test_rejects_non_edges(edge):
    with pytest.raises(GridError, match="not a grid edge"):
        make_grid(3, 1, [edge])


def test_rejects_duplicates_in_either_order():
    with pytest.raises(GridError, match="duplicate"):
        make_grid(2, 2, [((0, 0), (0, 1)), ((0, 1), (0, 0))])


@pytest.mark.parametrize("rows, cols", [(0, 1), (1, 0), (-2, 3), (True, 2)])
def test_rejects_bad_dimensions(rows, cols):
    with pytest.raises(GridError):
        make_grid(rows, cols)


@given(st.integers(1, 12), st.integers(1, 12))
def test_edge_count_formula(rows, cols):
    g = make_grid(rows, cols)
    edges = list(g.edges())
    assert len(edges) == len(set(edges)) == rows * (cols - 1) + cols * (rows - 1) == g.num_edges
    for u, v in edges:
        assert u < v and g.is_edge(u, v)


@given(st.data())
def test_normalization_is_order_independent(data):
    rows, cols = data.draw(st.integers(1, 6)), data.draw(st.integers(1, 6))
    edges = list(make_grid(rows, cols).edges())
    chosen = data.draw(st.lists(st.sampled_from(edges), unique=True)) if edges else []
    flips = [data.draw(st.booleans()) for _ in chosen]
    given_edges = [(v, u) if f else (u, v) for (u, v), f in zip(chosen, flips)]
    a = make_grid(rows, cols, given_edges)
    b = make_grid(rows, cols, list(reversed(chosen)))
    assert a == b
    assert make_grid(rows, cols, sorted(a.negative_edges)) == a


def test_random_signature_extremes():
    for seed in range(5):
        assert random_signature(4, 5, 0, seed).negative_edges == frozenset()
        g = random_signature(4, 5, 1, seed)
        assert g.negative_edges == frozenset(g.edges())


def test_random_signature_deterministic_and_seed_dependent():
    a = random_signature(10, 10, Fraction(1, 2), 42)
    assert a == random_signature(10, 10, 0.5, 42)
    assert a != random_signature(10, 10, 0.5, 43)


def test_random_signature_rate():
    g = random_signature(40, 40, Fraction(1, 4), 3)
    rate = len(g.negative_edges) / g.num_edges
    assert 0.2 < rate < 0.3


def test_random_signature_is_monotone_in_probability():
    # same uniform per edge, so raising p only adds edges
    lo = random_signature(8, 8, 0.25, 9).negative_edges
    hi = random_signature(8, 8, 0.75, 9).negative_edges
    assert lo <= hi


def test_random_signature_rejects_bad_probability():
    with pytest.raises(GridError):
        random_signature(2, 2, 1.5, 0)


def test_serialize_example():
    doc = json.loads(serialize_grid(make_grid(1, 2, [((0, 0), (0, 1))])))
    assert doc == {"rows": 1, "cols": 2, "negative_edges": [[0, 0, 0, 1]]}


@settings(max_examples=50)
@given(st.integers(1, 8), st.integers(1, 8), st.fractions(0, 1), st.integers(0, 2**64 - 1))
def test_round_trip(rows, cols, p, seed):
    g = random_signature(rows, cols, p, seed)
    assert parse_grid(serialize_grid(g)) == g


@pytest.mark.parametrize("text, fragment", [
    ('{"rows": 3, "cols": 1, "negative_edges": [[0, 0, 2, 0]]}', "negative_edges[0]"),
    ('{"rows": 2, "cols": 2, "negative_edges": [[0, 1, 0, 0]]}', "lexicographically"),
    ('{"rows": 2, "cols": 2, "negative_edges": [[0, 0, 0, 1], [0, 0, 0, 1]]}', "negative_edges[1]"),
    ('{"rows": 2, "cols": 2, "negative_edges": [[0, 0, 0]]}', "4 integers"),
    ('{"rows": 2, "cols": 2, "negative_edges": [], "extra": 1}', "unknown field"),
    ('{"rows": 2, "negative_edges": []}', "missing field"),
    ('{"rows": 0, "cols": 2, "negative_edges": []}', "positive"),
    ('{"rows": "2", "cols": 2, "negative_edges": []}', "rows"),
    ('{"rows": 2, "cols": 2,\n "negative_edges": [', "line 2"),
    ('[1, 2]', "object"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(GridError) as info:
        parse_grid(text)
    assert fragment in str(info.value)


def test_all_signatures():
    sigs = list(all_signatures(2, 2))
    assert len(sigs) == 16 and len(set(sigs)) == 16
    assert sigs[0].negative_edges == frozenset()


def test_row_sign_helpers():
    g = make_grid(2, 3, [((0, 1), (0, 2)), ((0, 2), (1, 2))])
    assert g.horizontal_signs(0) == [PLUS, MINUS]
    assert g.vertical_signs(1) == [PLUS, PLUS, MINUS]
    assert list(g.vertices())[-1] == GridVertex(1, 2)
