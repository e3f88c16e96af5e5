"""Colouring signified grids into SP_9, row by row.

The first row is a path, coloured greedily inside the positive neighbourhood
of 0.  Every later row is coloured in two passes over its vertices
``b_1..b_n`` with the row above ``a_1..a_n`` already fixed:

* forward: ``S_1`` is three colours compatible with the vertical edge at
  ``a_1``; ``S_i`` is three colours of ``N(S_{i-1}, horizontal sign) ∩
  N(h(a_i), vertical sign)``.  Such an intersection always has at least three
  members in SP_9, and it is triangle free because it sits inside a signed
  neighbourhood of ``h(a_i)``.
* backward: ``h(b_n)`` is any member of ``S_n``; ``h(b_i)`` is a member of
  ``S_i`` joined to ``h(b_{i+1})`` by the right sign, which exists because
  ``S_{i+1}`` was drawn from the neighbourhood of ``S_i``.

Every free choice takes the smallest canonical encoding, so the result is a
pure function of the grid.

Coloring file format (JSON)::

    {"rows": R, "cols": C, "colors": [[c, ...], ...]}

with ``R`` lists of ``C`` integers in ``0..8`` (canonical GF(9) encoding).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .bits import first, lowest, members
from .signed_grid import GridVertex, SignedGrid
from .signed_paley import MINUS, PLUS, Sign, SignedPaleyGraph, is_triangle_free_mask, sp9

SET_SIZE = 3


class InvariantError(RuntimeError):
    """The construction hit a state the theory rules out; the target is not SP_9."""


class ColoringError(ValueError):
    """Malformed coloring document or a coloring that does not fit its grid."""


@dataclass(frozen=True)
class GridColoring:
    rows: int
    cols: int
    colors: tuple

    def __post_init__(self):
        colors = tuple(tuple(row) for row in self.colors)
        object.__setattr__(self, "colors", colors)
        if len(colors) != self.rows or any(len(row) != self.cols for row in colors):
            raise ColoringError(f"colors must be a {self.rows}x{self.cols} array")

    def __getitem__(self, v) -> int:
        return self.colors[v[0]][v[1]]

    def as_lists(self) -> list:
        return [list(row) for row in self.colors]


@dataclass(frozen=True)
class RowState:
    """Candidate sets ``S_1..S_n`` of one row, as bitmasks over the target's vertices."""

    masks: tuple

    @property
    def sets(self) -> tuple:
        return tuple(frozenset(members(m)) for m in self.masks)

    def __len__(self):
        return len(self.masks)


def color_path(signs: Sequence[Sign], target: Optional[SignedPaleyGraph] = None) -> List[int]:
    """Colour a path whose ``i``-th edge has sign ``signs[i]``, using only ``N+(0)``."""
    target = target or sp9()
    palette = target.neighbor_mask(0, PLUS)
    if not palette:
        raise InvariantError("N+(0) is empty")
    c = first(palette)
    out = [c]
    for i, s in enumerate(signs):
        choices = palette & target.neighbor_mask(c, s)
        if not choices:
            raise InvariantError(
                f"no colour in N+(0) is joined to {target.label(c)} by sign {s} (path edge {i})"
            )
        c = first(choices)
        out.append(c)
    return out


def _check_set(target, mask, i):
    if mask.bit_count() != SET_SIZE:
        raise InvariantError(f"candidate set S_{i + 1} has {mask.bit_count()} members, expected {SET_SIZE}")
    if not is_triangle_free_mask(target, mask):
        raise InvariantError(f"candidate set S_{i + 1} contains a single-sign triangle")


def propagate_sets(
    prev_row_colors: Sequence[int],
    vertical_signs: Sequence[Sign],
    horizontal_signs: Sequence[Sign],
    target: Optional[SignedPaleyGraph] = None,
) -> RowState:
    """Forward pass: build ``S_1..S_n`` from the row above and the edge signs."""
    target = target or sp9()
    n = len(prev_row_colors)
    if n < 1 or len(vertical_signs) != n or len(horizontal_signs) != n - 1:
        raise ValueError(
            f"inconsistent lengths: {n} colours, {len(vertical_signs)} vertical signs, "
            f"{len(horizontal_signs)} horizontal signs"
        )
    nbr = target.neighbor_mask
    union = target.set_neighbor_mask
    cur = lowest(nbr(prev_row_colors[0], vertical_signs[0]), SET_SIZE)
    _check_set(target, cur, 0)
    masks = [cur]
    for i in range(1, n):
        avail = union(cur, horizontal_signs[i - 1]) & nbr(prev_row_colors[i], vertical_signs[i])
        cur = lowest(avail, SET_SIZE)
        _check_set(target, cur, i)
        masks.append(cur)
    return RowState(tuple(masks))


def select_backward(
    state: RowState,
    horizontal_signs: Sequence[Sign],
    target: Optional[SignedPaleyGraph] = None,
) -> List[int]:
    """Backward pass: fix colours right to left, each inside its candidate set."""
    target = target or sp9()
    n = len(state.masks)
    if len(horizontal_signs) != n - 1:
        raise ValueError(f"expected {n - 1} horizontal signs, got {len(horizontal_signs)}")
    out = [0] * n
    c = first(state.masks[-1])
    out[-1] = c
    for i in range(n - 2, -1, -1):
        choices = state.masks[i] & target.neighbor_mask(c, horizontal_signs[i])
        if not choices:
            raise InvariantError(f"no colour of S_{i + 1} fits next to {target.label(c)}")
        c = first(choices)
        out[i] = c
    return out


def color_grid(g: SignedGrid, target: Optional[SignedPaleyGraph] = None) -> GridColoring:
    """Colour a signified grid into SP_9 (or ``target``), top row first."""
    target = target or sp9()
    row = color_path(g.horizontal_signs(0), target)
    rows = [row]
    for r in range(1, g.rows):
        hs = g.horizontal_signs(r)
        state = propagate_sets(row, g.vertical_signs(r), hs, target)
        row = select_backward(state, hs, target)
        rows.append(row)
    return GridColoring(g.rows, g.cols, tuple(tuple(x) for x in rows))


@dataclass(frozen=True)
class Violation:
    u: GridVertex
    v: GridVertex
    expected: Sign
    actual: Optional[Sign]

    def __str__(self):
        where = f"{tuple(self.u)}-{tuple(self.v)}"
        if self.actual is None:
            return f"{where}: equal colors on an edge"
        return f"{where}: sign mismatch: grid {self.expected}, target {self.actual}"


@dataclass
class Verdict:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def verify_homomorphism(g: SignedGrid, col: GridColoring, target=None) -> Verdict:
    """Check that ``col`` maps every grid edge onto a target edge of the same sign.

    ``target`` is anything with ``order`` and ``edge_sign(u, v)`` returning a
    :class:`Sign` or None for a non-edge; SP_9 by default.
    """
    target = target or sp9()
    if (col.rows, col.cols) != (g.rows, g.cols):
        raise ColoringError(f"dimension mismatch: grid is {g.rows}x{g.cols}, coloring is {col.rows}x{col.cols}")
    for r, row in enumerate(col.colors):
        for c, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < target.order:
                raise ColoringError(f"colors[{r}][{c}]: {x!r} is not a vertex of the target")
    verdict = Verdict()
    neg = g.negative_edges
    for u, v in g.edges():
        expected = MINUS if (u, v) in neg else PLUS
        actual = target.edge_sign(col[u], col[v])
        if actual is not expected:
            verdict.violations.append(Violation(u, v, expected, actual))
    return verdict


def serialize_coloring(col: GridColoring) -> str:
    return json.dumps({"rows": col.rows, "cols": col.cols, "colors": col.as_lists()}) + "\n"


def parse_coloring(text: str) -> GridColoring:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ColoringError(f"malformed coloring document at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ColoringError("coloring document: top level must be an object")
    unknown = sorted(set(doc) - {"rows", "cols", "colors"})
    if unknown:
        raise ColoringError(f"coloring document: unknown field(s) {', '.join(unknown)}")
    for key in ("rows", "cols", "colors"):
        if key not in doc:
            raise ColoringError(f"coloring document: missing field {key!r}")
    rows, cols, colors = doc["rows"], doc["cols"], doc["colors"]
    for key, val in (("rows", rows), ("cols", cols)):
        if isinstance(val, bool) or not isinstance(val, int) or val < 1:
            raise ColoringError(f"{key}: expected a positive integer, got {val!r}")
    if not isinstance(colors, list) or len(colors) != rows:
        raise ColoringError(f"colors: expected a list of {rows} rows")
    for r, row in enumerate(colors):
        if not isinstance(row, list) or len(row) != cols:
            raise ColoringError(f"colors[{r}]: expected a list of {cols} integers")
        for c, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x <= 8:
                raise ColoringError(f"colors[{r}][{c}]: expected an integer in 0..8, got {x!r}")
    return GridColoring(rows, cols, colors)


def coloring_from_mapping(g: SignedGrid, mapping: dict) -> GridColoring:
    return GridColoring(g.rows, g.cols, [[mapping[GridVertex(r, c)] for c in range(g.cols)] for r in range(g.rows)])
