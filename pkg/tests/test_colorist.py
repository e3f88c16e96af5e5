import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sp9grid import field_gf9 as gf
from sp9grid.colorist import (
    ColoringError, GridColoring, InvariantError, RowState, color_grid, color_path, parse_coloring, propagate_sets,
    select_backward, serialize_coloring, verify_homomorphism,
)
from sp9grid.signed_grid import make_grid, random_signature
from sp9grid.signed_paley import MINUS, PLUS, is_triangle_free, neighbors, set_neighborhood, sign_of, sp9

SP9 = sp9()
N0_PLUS = frozenset(neighbors(SP9, 0, PLUS))


def enc(*names):
    return [gf.encode(gf.parse(n)) for n in names]


def grids(max_side=8):
    return st.builds(
        random_signature,
        st.integers(1, max_side),
        st.integers(1, max_side),
        st.sampled_from([0, 0.25, 0.5, 0.75, 1]),
        st.integers(0, 2**32),
    )


# color_path

def test_path_single_vertex():
    assert color_path([]) == enc("1")


def test_path_one_plus_edge():
    assert color_path([PLUS]) == enc("1", "2")


def test_path_two_minus_edges():
    # smallest negative neighbour of x inside N+(0) is 1 again
    assert color_path([MINUS, MINUS]) == enc("1", "x", "1")


@given(st.lists(st.sampled_from([PLUS, MINUS]), max_size=40))
def test_path_is_valid_and_uses_four_colors(signs):
    out = color_path(signs)
    assert len(out) == len(signs) + 1
    assert set(out) <= N0_PLUS
    for i, s in enumerate(signs):
        assert sign_of(SP9, out[i], out[i + 1]) is s


# propagate / select

def test_propagate_example():
    state = propagate_sets(enc("1", "2"), [PLUS, PLUS], [PLUS])
    assert state.sets == (frozenset(enc("0", "2", "x+1")), frozenset(enc("0", "1", "x+2")))
    # recompute from the graph queries
    assert neighbors(SP9, 1, PLUS) == frozenset(enc("0", "2", "x+1", "2x+1"))
    assert set_neighborhood(SP9, state.sets[0], PLUS) == frozenset(range(9)) - set(enc("x+1"))
    assert neighbors(SP9, 2, PLUS) == frozenset(enc("0", "1", "x+2", "2x+2"))


def test_select_example():
    state = propagate_sets(enc("1", "2"), [PLUS, PLUS], [PLUS])
    assert select_backward(state, [PLUS]) == enc("2", "0")


def test_single_column_row():
    state = propagate_sets([5], [MINUS], [])
    assert len(state) == 1 and len(state.sets[0]) == 3
    assert select_backward(state, []) == [min(state.sets[0])]


def test_propagate_rejects_inconsistent_lengths():
    with pytest.raises(ValueError):
        propagate_sets([1, 2], [PLUS], [PLUS])
    with pytest.raises(ValueError):
        propagate_sets([], [], [])


@settings(max_examples=200)
@given(st.data())
def test_set_chain_invariants(data):
    n = data.draw(st.integers(1, 12))
    prev = data.draw(st.lists(st.integers(0, 8), min_size=n, max_size=n))
    vs = data.draw(st.lists(st.sampled_from([PLUS, MINUS]), min_size=n, max_size=n))
    hs = data.draw(st.lists(st.sampled_from([PLUS, MINUS]), min_size=n - 1, max_size=n - 1))
    state = propagate_sets(prev, vs, hs)
    sets = state.sets
    for i, s in enumerate(sets):
        assert len(s) == 3 and is_triangle_free(SP9, s)
        assert s <= neighbors(SP9, prev[i], vs[i])
        if i:
            assert s <= set_neighborhood(SP9, sets[i - 1], hs[i - 1])
    row = select_backward(state, hs)
    for i, c in enumerate(row):
        assert c in sets[i]
        assert sign_of(SP9, prev[i], c) is vs[i]
        if i:
            assert sign_of(SP9, row[i - 1], c) is hs[i - 1]


def test_select_aborts_on_broken_state():
    # S_2 = {0} cannot be reached from S_1 = {0} by any edge
    with pytest.raises(InvariantError):
        select_backward(RowState((0b1, 0b1)), [PLUS])


# color_grid

def test_grid_examples():
    assert color_grid(make_grid(2, 2)).as_lists() == [enc("1", "2"), enc("2", "0")]
    assert color_grid(make_grid(1, 1)).as_lists() == [enc("1")]


@settings(max_examples=300)
@given(grids())
def test_color_grid_is_sound(g):
    col = color_grid(g)
    assert verify_homomorphism(g, col).ok
    assert set(col.colors[0]) <= N0_PLUS
    assert color_grid(g) == col


def test_single_column_grid():
    g = random_signature(30, 1, 0.5, 1)
    assert verify_homomorphism(g, color_grid(g)).ok


# verify_homomorphism

def test_verify_ok_example():
    assert verify_homomorphism(make_grid(2, 2), GridColoring(2, 2, [enc("1", "2"), enc("2", "0")])).ok


def test_verify_equal_colors():
    v = verify_homomorphism(make_grid(1, 2), GridColoring(1, 2, [[0, 0]]))
    assert not v.ok and "equal colors on an edge" in str(v.violations[0])


def test_verify_sign_mismatch():
    v = verify_homomorphism(make_grid(1, 2), GridColoring(1, 2, [enc("0", "x+1")]))
    assert not v.ok
    assert str(v.violations[0]).endswith("sign mismatch: grid +, target -")


def test_verify_reports_every_violation():
    g = make_grid(2, 2)
    v = verify_homomorphism(g, GridColoring(2, 2, [[0, 0], [0, 0]]))
    assert len(v.violations) == 4


def test_verify_dimension_mismatch():
    with pytest.raises(ColoringError, match="dimension"):
        verify_homomorphism(make_grid(2, 2), GridColoring(1, 2, [[1, 2]]))


def test_verify_rejects_out_of_range_color():
    with pytest.raises(ColoringError):
        verify_homomorphism(make_grid(1, 2), GridColoring(1, 2, [[1, 9]]))


def _mutant_outcome(g, target):
    try:
        col = color_grid(g, target)
    except InvariantError:
        return "tripped"
    return "ok" if verify_homomorphism(g, col).ok else "rejected"


def test_mutated_target_is_detected():
    bad = SP9.flipped(0, 1)
    outcomes = {_mutant_outcome(random_signature(6, 6, 0.5, seed), bad) for seed in range(10)}
    assert outcomes & {"tripped", "rejected"}


# file format

def test_coloring_round_trip():
    col = color_grid(random_signature(7, 4, 0.5, 11))
    assert parse_coloring(serialize_coloring(col)) == col
    doc = json.loads(serialize_coloring(col))
    assert set(doc) == {"rows", "cols", "colors"}


@pytest.mark.parametrize("text", [
    '{"rows": 1, "cols": 2, "colors": [[1, 9]]}',
    '{"rows": 1, "cols": 2, "colors": [[1]]}',
    '{"rows": 2, "cols": 1, "colors": [[1]]}',
    '{"rows": 1, "cols": 1, "colors": [[true]]}',
    '{"rows": 1, "cols": 1, "colors": [[1]], "x": 0}',
    '{"rows": 1, "cols": 1}',
    '{"rows": 1,',
])
def test_coloring_parse_errors(text):
    with pytest.raises(ColoringError):
        parse_coloring(text)
